#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/lattice.hpp"
#include "qcat/quantaloid.hpp"

namespace qcat {

/// Raw unital quantale tables over canonical element indices.
struct QuantaleSpec {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> tensor;
  int unit = 0;
  bool operator==(const QuantaleSpec&) const = default;
};

/// Validated view of a QuantaleSpec with derived implications.
class Quantale {
 public:
  explicit Quantale(QuantaleSpec spec);  // throws StructureError
  const QuantaleSpec& spec() const { return spec_; }
  const FiniteLattice& lattice() const { return lat_; }
  int size() const { return lat_.size(); }
  int tensor(int a, int b) const { return spec_.tensor[a][b]; }
  /// a/b: largest x with x&b ≤ a.
  int ldiv(int a, int b) const { return ldiv_[a * size() + b]; }
  /// a↘b: largest y with a&y ≤ b.
  int rdiv(int a, int b) const { return rdiv_[a * size() + b]; }

 private:
  QuantaleSpec spec_;
  FiniteLattice lat_;
  std::vector<int> ldiv_;
  std::vector<int> rdiv_;
};

/// Lattice completeness plus associativity, unit and join-preservation of the tensor.
std::vector<std::string> validate_quantale(const QuantaleSpec& q);

/// Łukasiewicz chain 0 < 1/(n-1) < ... < 1; throws InvalidSize for n < 2.
QuantaleSpec build_lukasiewicz_chain(int n);
/// Chain with minimum as tensor.
QuantaleSpec build_godel_chain(int n);
/// n-chain with a&b = 0 if a+b ≤ 1 else min(a,b).
QuantaleSpec build_nilpotent_minimum_chain(int n);
/// Boolean algebra on `atoms` atoms with meet as tensor.
QuantaleSpec build_boolean_algebra(int atoms);

struct DivisibilityResult {
  bool divisible = true;
  std::optional<std::pair<int, int>> witness;
  std::vector<std::pair<int, int>> violations;
};

/// Checks (b/a)&a = a∧b = a&(a↘b) for every pair.
DivisibilityResult check_divisible(const QuantaleSpec& q);

/// Objects are the elements, hom(X,Y) = ↓(X∧Y); throws NotDivisible.
Quantaloid quantaloid_from_divisible_quantale(const QuantaleSpec& q);

}  // namespace qcat
