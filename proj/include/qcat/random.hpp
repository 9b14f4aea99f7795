#pragma once

#include <cstdint>
#include <random>

#include "qcat/distributor.hpp"

namespace qcat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform integer in [0, n).
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

 private:
  std::mt19937_64 gen_;
};

int random_arrow(const Quantaloid& Q, int X, int Y, Rng& rng);
/// Random types and homs, then unit on the diagonal and transitive closure.
CategoryPtr random_category(const QuantaloidPtr& Q, int n, Rng& rng);
/// Discrete category with random types (a fuzzy set for divisible-quantale quantaloids).
CategoryPtr random_discrete(const QuantaloidPtr& Q, int n, Rng& rng, const std::string& prefix);
/// A fresh n-object category together with a functor into B.
QFunctor random_functor_into(const CategoryPtr& B, int n, Rng& rng);
/// Random matrix closed to B∘φ∘A.
QDistributor random_distributor(const CategoryPtr& A, const CategoryPtr& B, Rng& rng);
Weight random_presheaf(const QCategory& A, int X, Rng& rng);
Weight random_copresheaf(const QCategory& A, int X, Rng& rng);

/// Two composable infomorphisms i: φ→ψ and j: ψ→ω pulled back from a random base.
struct InfomorphismChain {
  Infomorphism i;
  Infomorphism j;
};
InfomorphismChain random_infomorphism_chain(const QuantaloidPtr& Q, int n, Rng& rng);

}  // namespace qcat
