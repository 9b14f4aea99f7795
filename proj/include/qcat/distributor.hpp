#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qcat/enriched.hpp"

namespace qcat {

/// Typed arrow matrix: entry (i,j) lies in Q(row_types[i], col_types[j]).
struct Matrix {
  std::vector<int> row_types;
  std::vector<int> col_types;
  std::vector<int> v;
  int rows() const { return static_cast<int>(row_types.size()); }
  int cols() const { return static_cast<int>(col_types.size()); }
  int at(int i, int j) const { return v[i * cols() + j]; }
  int& at(int i, int j) { return v[i * cols() + j]; }
  bool operator==(const Matrix&) const = default;
};

/// (ψ∘φ)(x,z) = ⋁_y ψ(y,z)∘φ(x,y).
Matrix mat_compose(const Quantaloid& Q, const Matrix& psi, const Matrix& phi);
/// (η↙φ)(y,z) = ⋀_x η(x,z)↙φ(x,y).
Matrix mat_lres(const Quantaloid& Q, const Matrix& eta, const Matrix& phi);
/// (ψ↘η)(x,y) = ⋀_z ψ(y,z)↘η(x,z).
Matrix mat_rres(const Quantaloid& Q, const Matrix& psi, const Matrix& eta);
bool mat_leq(const Quantaloid& Q, const Matrix& a, const Matrix& b);
Matrix mat_join(const Quantaloid& Q, const Matrix& a, const Matrix& b);
Matrix mat_meet(const Quantaloid& Q, const Matrix& a, const Matrix& b);
Matrix mat_bottom(const Quantaloid& Q, std::vector<int> rows, std::vector<int> cols);
Matrix mat_top(const Quantaloid& Q, std::vector<int> rows, std::vector<int> cols);
Matrix hom_matrix(const QCategory& A);

struct QDistributor {
  CategoryPtr dom;
  CategoryPtr cod;
  Matrix m;
  int operator()(int x, int y) const { return m.at(x, y); }
};

/// Builds a distributor from a row-major arrow matrix; throws TypeError on out-of-hom entries.
QDistributor make_distributor(CategoryPtr dom, CategoryPtr cod, std::vector<int> entries);
QDistributor identity_distributor(const CategoryPtr& A);
LawReport validate_distributor(const QDistributor& phi);
/// ψ∘φ for φ: A⇸B, ψ: B⇸C.
QDistributor compose_distributors(const QDistributor& psi, const QDistributor& phi);
/// Left: dist_residual(η, φ) = η↙φ : B⇸C. Right: dist_residual(ψ, η) = ψ↘η : A⇸B.
QDistributor dist_residual(Side side, const QDistributor& a, const QDistributor& b);
bool dist_leq(const QDistributor& a, const QDistributor& b);
/// A ≤ ψ∘φ and φ∘ψ ≤ B.
bool dist_adjoint_check(const QDistributor& phi, const QDistributor& psi);

struct GraphCograph {
  QDistributor graph;    // F_♮(x,y) = B(Fx,y)
  QDistributor cograph;  // F^♮(y,x) = B(y,Fx)
};
GraphCograph graph_cograph(const QFunctor& F);

/// Weight vector of a presheaf (w[a] ∈ Q(ta,X)) or copresheaf (w[a] ∈ Q(X,ta)) of type X.
struct Weight {
  int type = 0;
  std::vector<int> w;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};
using Presheaf = Weight;
using Copresheaf = Weight;

enum class Variance { Contra, Co };

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

/// Presheaf μ as the column matrix A⇸*_X; copresheaf λ as the row matrix *_X⇸A.
Matrix presheaf_matrix(const QCategory& A, const Weight& mu);
Matrix copresheaf_matrix(const QCategory& A, const Weight& lam);
Weight presheaf_of(const Matrix& column);
Weight copresheaf_of(const Matrix& row);

bool is_presheaf(const QCategory& A, const Weight& mu);
bool is_copresheaf(const QCategory& A, const Weight& lam);
/// Least presheaf above an arbitrary type-correct vector: μ∘A.
Weight presheaf_closure(const QCategory& A, const Weight& w);
Weight copresheaf_closure(const QCategory& A, const Weight& w);
Weight top_weight(const QCategory& A, Variance v, int X);
Weight bottom_weight(const QCategory& A, Variance v, int X);

/// PA(μ,λ) = λ↙μ.
int presheaf_hom(const QCategory& A, const Weight& mu, const Weight& lam);
/// P†A(μ,λ) = λ↘μ.
int copresheaf_hom(const QCategory& A, const Weight& mu, const Weight& lam);
int weight_hom(const QCategory& A, Variance v, const Weight& a, const Weight& b);

inline constexpr std::uint64_t kDefaultCap = 200000;

/// Product of candidate counts for weights of type X.
std::uint64_t weight_space_bound(const QCategory& A, Variance v, int X);
/// All presheaves (resp. copresheaves), ordered by type then lexicographically.
/// Throws PresheafSpaceTooLarge when a per-type candidate bound exceeds `cap`.
std::vector<Weight> enumerate_weights(const QCategory& A, Variance v, std::uint64_t cap);

/// PA or P†A with its enumeration and an index.
struct PresheafSpace {
  CategoryPtr base;
  Variance variance = Variance::Contra;
  std::vector<Weight> items;
  CategoryPtr cat;
  std::unordered_map<Weight, int, WeightHash> index;
  int size() const { return static_cast<int>(items.size()); }
  /// Index of `w`, or -1.
  int find(const Weight& w) const;
  int at(const Weight& w) const;  // throws StructureError when absent
};
using PresheafSpacePtr = std::shared_ptr<const PresheafSpace>;

PresheafSpacePtr presheaf_category(const CategoryPtr& A, Variance v,
                                   std::uint64_t cap = kDefaultCap);
/// Category over explicit weights (any subset of PA or P†A).
CategoryPtr weight_category(const QCategory& A, Variance v, const std::vector<Weight>& items,
                            const std::string& prefix);

/// Y a = A(−,a) (contra) or Y†a = A(a,−) (co).
Weight yoneda_weight(const QCategory& A, Variance v, int a);
QFunctor yoneda(const PresheafSpace& P);

enum class ImageKind { Ra, La, Nra, Nla };

/// F^→(μ) = μ∘F^♮, F^←(λ) = λ(F−), F^⇒(μ) = F_♮∘μ, F^⇐(λ) = λ(F−).
Weight image_weight(const QFunctor& F, ImageKind kind, const Weight& w);
/// The image functor between enumerated (co)presheaf spaces.
QFunctor image_functor(const QFunctor& F, ImageKind kind, const PresheafSpace& PA,
                       const PresheafSpace& PB);

struct Infomorphism {
  QDistributor source;  // φ: A⇸B
  QDistributor target;  // ψ: A'⇸B'
  QFunctor F;           // A → A'
  QFunctor G;           // B' → B
};

/// Failing (x,y') pairs of φ(x,Gy') = ψ(Fx,y').
LawReport validate_infomorphism(const Infomorphism& i);
Infomorphism identity_infomorphism(const QDistributor& phi);
/// j∘i = (F'∘F, G∘G'); throws Mismatch unless target(i) = source(j).
Infomorphism compose_infomorphisms(const Infomorphism& j, const Infomorphism& i);
/// (F, F^←) from (Y_A)_♮ to (Y_B)_♮.
Infomorphism yoneda_infomorphism(const QFunctor& F, const PresheafSpacePtr& PA,
                                 const PresheafSpacePtr& PB);
/// (Y_A)_♮(x,μ) = μ(x).
QDistributor yoneda_graph(const PresheafSpacePtr& PA);

}  // namespace qcat
