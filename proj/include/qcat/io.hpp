#pragma once

#include <string>
#include <vector>

#include "qcat/adjunction.hpp"
#include "qcat/quantale.hpp"

namespace qcat {

/// Objects and attributes with membership degrees and an incidence matrix, all as element indices.
struct FuzzyContext {
  QuantaleSpec quantale;
  std::vector<std::string> objects;
  std::vector<int> object_degrees;
  std::vector<std::string> attributes;
  std::vector<int> attribute_degrees;
  std::vector<std::vector<int>> incidence;
  /// Two-element quantale with every membership at the top.
  bool crisp() const;
  bool operator==(const FuzzyContext&) const = default;
};

/// Throws SchemaError (with line or field path) and DegreeOutOfHom.
FuzzyContext parse_context(const std::string& path);
FuzzyContext parse_context_text(const std::string& text, const std::string& source = "<input>");
std::string serialize_context(const FuzzyContext& c);

/// Crisp contexts live over the one-object quantaloid 2; others over the divisible-quantale quantaloid.
QDistributor context_distributor(const FuzzyContext& c);

QuantaleSpec parse_quantale(const std::string& path);
QuantaleSpec parse_quantale_text(const std::string& text, const std::string& source = "<input>");

CategoryPtr parse_category(const std::string& path);
CategoryPtr parse_category_text(const std::string& text, const std::string& source = "<input>");
QDistributor parse_distributor(const std::string& path);
Infomorphism parse_infomorphism(const std::string& path);

/// Resolves a label or exact rational "k/n" among `labels`; -1 when absent.
int resolve_degree(const std::vector<std::string>& labels, const std::string& text);

enum class DocKind { Quantale, Quantaloid, Category, Distributor, Context, Infomorphism };
DocKind parse_doc_kind(const std::string& name);  // throws SchemaError

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
/// Parses and validates a document. Schema problems propagate as SchemaError.
ValidationReport validate_document(const std::string& path, DocKind kind, bool require_divisible = false);

}  // namespace qcat
