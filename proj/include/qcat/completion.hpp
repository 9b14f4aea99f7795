#pragma once

#include <optional>
#include <vector>

#include "qcat/distributor.hpp"

namespace qcat {

/// f ⊗ x for f: tx → X: the least a of type X with A(a,−) = A(x,−)↙f.
std::optional<int> tensor(const QCategory& A, Arrow f, int x);
/// f ⇒ x for f: X → tx: the least b of type X with A(−,b) = f↘A(−,x).
std::optional<int> cotensor(const QCategory& A, Arrow f, int x);

/// The least a with A(a,−) = A↙μ.
std::optional<int> sup(const QCategory& A, const Weight& mu);
/// The least b with A(−,b) = λ↘A.
std::optional<int> inf(const QCategory& A, const Weight& lam);

/// colim_μ F: B(c,−) = F_♮↙μ.
std::optional<int> colimit(const QFunctor& F, const Weight& mu);
/// lim_λ F: B(−,l) = λ↘F^♮.
std::optional<int> limit(const QFunctor& F, const Weight& lam);

struct CompletenessReport {
  bool complete = false;       // every presheaf has a supremum
  bool dual_complete = false;  // every copresheaf has an infimum
  bool formulas_agree = true;  // closed sup/inf formulas match the searched witnesses
  std::optional<Weight> missing_sup;
  std::optional<Weight> missing_inf;
  std::vector<Weight> presheaves;
  std::vector<int> sups;  // per presheaf, -1 when absent
  std::vector<Weight> copresheaves;
  std::vector<int> infs;
  bool consistent() const { return complete == dual_complete && formulas_agree; }
};

/// Throws PresheafSpaceTooLarge when PA or P†A exceeds `cap`.
CompletenessReport is_complete(const QCategory& A, std::uint64_t cap = kDefaultCap);

/// An endomap of an enumerated presheaf space given by its object table.
struct ClosureOperator {
  PresheafSpacePtr space;
  std::vector<int> map;
  int operator()(int i) const { return map[i]; }
};

/// Functoriality, inflation and exact idempotence.
LawReport closure_operator_check(const ClosureOperator& C);
ClosureOperator identity_closure(const PresheafSpacePtr& P);
/// T(μ)(x) = ⊤.
ClosureOperator trivial_closure(const PresheafSpacePtr& P);
/// Indices of μ with Cμ = μ, ascending.
std::vector<int> closure_fixed_points(const ClosureOperator& C);
/// The full subcategory of PA on the fixed points.
CategoryPtr fixed_point_category(const ClosureOperator& C);

struct ContinuityReport {
  bool inequality = false;  // F^→∘C ≤ D∘F^→
  bool preimage = false;    // F^← maps D-closed presheaves to C-closed ones
};
ContinuityReport continuity_check(const QFunctor& F, const ClosureOperator& C,
                                  const ClosureOperator& D);

/// ζ_C: A ⇸ C(PA) with ζ_C(x, μ) = μ(x).
QDistributor closure_to_context(const ClosureOperator& C);

enum class KanDir { Left, Right };

struct KanExtension {
  std::optional<QFunctor> functor;
  int failing = -1;  // object of C whose (co)limit is missing
};

/// (Lan_K F)c = colim_{C(K−,c)} F; (Ran_K F)c = lim_{C(c,K−)} F.
KanExtension kan_extension_pointwise(const QFunctor& F, const QFunctor& K, KanDir dir);

}  // namespace qcat
