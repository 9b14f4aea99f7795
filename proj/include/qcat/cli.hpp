#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qcat/io.hpp"

namespace qcat::cli {

/// QCAT_CAP when set to a positive integer, otherwise kDefaultCap.
std::uint64_t default_cap();

/// Presheaf spaces up to this size get a brute cross-check of generated lattices.
inline constexpr std::uint64_t kCrossCheckLimit = 10000;

struct LatticeOutput {
  std::string document;  // JSON, newline terminated
  std::string summary;
  bool cross_check_ok = true;
};

/// Throws NotDivisible and PresheafSpaceTooLarge.
LatticeOutput cmd_concepts(const FuzzyContext& c, ConceptKind mode, Algorithm algorithm,
                           std::uint64_t cap = kDefaultCap);
LatticeOutput cmd_macneille(const CategoryPtr& A, std::uint64_t cap = kDefaultCap);

/// Full command line entry point; returns the exit code (0 ok, 1 failure, 2 usage).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcat::cli
