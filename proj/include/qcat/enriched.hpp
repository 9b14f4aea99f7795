#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/quantaloid.hpp"

namespace qcat {

struct QTypedSet {
  std::vector<std::string> names;
  std::vector<int> types;
};

/// Q-category: typed objects and a hom matrix hom(x,y) ∈ Q(tx,ty), row-major.
class QCategory {
 public:
  /// Throws TypeError when a type or arrow index is outside the quantaloid.
  QCategory(QuantaloidPtr Q, std::vector<std::string> names, std::vector<int> types,
            std::vector<int> hom);

  const Quantaloid& Q() const { return *Q_; }
  const QuantaloidPtr& quantaloid_ptr() const { return Q_; }
  int size() const { return static_cast<int>(types_.size()); }
  int type(int x) const { return types_[x]; }
  const std::vector<int>& types() const { return types_; }
  int hom(int x, int y) const { return hom_[x * size() + y]; }
  const std::vector<int>& homs() const { return hom_; }
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;

 private:
  QuantaloidPtr Q_;
  std::vector<std::string> names_;
  std::vector<int> types_;
  std::vector<int> hom_;
};

using CategoryPtr = std::shared_ptr<const QCategory>;

QCategory discrete_category(QuantaloidPtr Q, const QTypedSet& S);

/// Unit and transitivity violations; empty means valid.
LawReport validate_category(const QCategory& A);

struct Preorder {
  int n = 0;
  std::vector<char> rel;
  bool skeletal = true;
  bool le(int x, int y) const { return rel[x * n + y] != 0; }
  bool iso(int x, int y) const { return le(x, y) && le(y, x); }
};

/// x ≤ y iff tx = ty and 1_tx ≤ A(x,y).
Preorder underlying_preorder(const QCategory& A);

struct QFunctor {
  CategoryPtr dom;
  CategoryPtr cod;
  std::vector<int> map;
  int operator()(int x) const { return map[x]; }
};

struct FunctorReport {
  LawReport violations;
  bool fully_faithful = false;
  bool valid() const { return violations.empty(); }
};

FunctorReport validate_functor(const QFunctor& F);
QFunctor identity_functor(const CategoryPtr& A);
/// G∘F; throws CategoryMismatch unless cod F = dom G.
QFunctor compose_functors(const QFunctor& G, const QFunctor& F);
/// B(Fx,y) = A(x,Gy) for all x, y; throws CategoryMismatch on ambient mismatch.
bool functor_adjoint_check(const QFunctor& F, const QFunctor& G);
/// F ≤ G pointwise in the underlying order of the codomain.
bool functor_leq(const QFunctor& F, const QFunctor& G);
/// F ≅ G pointwise.
bool functor_iso(const QFunctor& F, const QFunctor& G);

/// All Q-functors A → B in lexicographic order of object maps (stops after `limit`).
std::vector<QFunctor> enumerate_functors(const CategoryPtr& A, const CategoryPtr& B,
                                         std::size_t limit = 1000000);
/// All type-preserving maps B → A that are right adjoint to F.
std::vector<QFunctor> find_right_adjoints(const QFunctor& F);

/// A bijection x ↦ y preserving types and homs, if one exists.
std::optional<std::vector<int>> find_isomorphism(const QCategory& A, const QCategory& B);

/// Full subcategory on `objects` (in the given order).
QCategory full_subcategory(const QCategory& A, const std::vector<int>& objects);

}  // namespace qcat
