#include "qcat/completion.hpp"

#include <algorithm>

#include "qcat/error.hpp"

namespace qcat {

namespace {

std::optional<int> find_row(const QCategory& B, int X, const std::vector<int>& row) {
  for (int c = 0; c < B.size(); ++c) {
    if (B.type(c) != X) continue;
    bool ok = true;
    for (int y = 0; y < B.size() && ok; ++y) ok = B.hom(c, y) == row[y];
    if (ok) return c;
  }
  return std::nullopt;
}

std::optional<int> find_col(const QCategory& B, int X, const std::vector<int>& col) {
  for (int c = 0; c < B.size(); ++c) {
    if (B.type(c) != X) continue;
    bool ok = true;
    for (int y = 0; y < B.size() && ok; ++y) ok = B.hom(y, c) == col[y];
    if (ok) return c;
  }
  return std::nullopt;
}

// ⋀_x B(Fx,y)↙μ(x) for each y.
std::vector<int> upper_row(const QCategory& A, const QCategory& B, const std::vector<int>& map,
                           const Weight& mu) {
  const Quantaloid& Q = A.Q();
  std::vector<int> row(B.size());
  for (int y = 0; y < B.size(); ++y) {
    const int ty = B.type(y);
    int acc = Q.top(mu.type, ty);
    for (int x = 0; x < A.size(); ++x)
      acc = Q.meet(mu.type, ty, acc, Q.lres(A.type(x), mu.type, ty, B.hom(map[x], y), mu.w[x]));
    row[y] = acc;
  }
  return row;
}

// ⋀_x λ(x)↘B(y,Fx) for each y.
std::vector<int> lower_col(const QCategory& A, const QCategory& B, const std::vector<int>& map,
                           const Weight& lam) {
  const Quantaloid& Q = A.Q();
  std::vector<int> col(B.size());
  for (int y = 0; y < B.size(); ++y) {
    const int ty = B.type(y);
    int acc = Q.top(ty, lam.type);
    for (int x = 0; x < A.size(); ++x)
      acc = Q.meet(ty, lam.type, acc, Q.rres(ty, lam.type, A.type(x), lam.w[x], B.hom(y, map[x])));
    col[y] = acc;
  }
  return col;
}

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

std::optional<int> tensor(const QCategory& A, Arrow f, int x) {
  if (f.dom != A.type(x)) throw Error(Errc::ObjectMismatch, "tensor: arrow domain is not tx");
  const Quantaloid& Q = A.Q();
  std::vector<int> row(A.size());
  for (int y = 0; y < A.size(); ++y) row[y] = Q.lres(f.dom, f.cod, A.type(y), A.hom(x, y), f.idx);
  return find_row(A, f.cod, row);
}

std::optional<int> cotensor(const QCategory& A, Arrow f, int x) {
  if (f.cod != A.type(x)) throw Error(Errc::ObjectMismatch, "cotensor: arrow codomain is not tx");
  const Quantaloid& Q = A.Q();
  std::vector<int> col(A.size());
  for (int y = 0; y < A.size(); ++y) col[y] = Q.rres(A.type(y), f.dom, f.cod, f.idx, A.hom(y, x));
  return find_col(A, f.dom, col);
}

std::optional<int> sup(const QCategory& A, const Weight& mu) {
  return find_row(A, mu.type, upper_row(A, A, identity_map(A.size()), mu));
}

std::optional<int> inf(const QCategory& A, const Weight& lam) {
  return find_col(A, lam.type, lower_col(A, A, identity_map(A.size()), lam));
}

std::optional<int> colimit(const QFunctor& F, const Weight& mu) {
  return find_row(*F.cod, mu.type, upper_row(*F.dom, *F.cod, F.map, mu));
}

std::optional<int> limit(const QFunctor& F, const Weight& lam) {
  return find_col(*F.cod, lam.type, lower_col(*F.dom, *F.cod, F.map, lam));
}

CompletenessReport is_complete(const QCategory& A, std::uint64_t cap) {
  CompletenessReport r;
  const Quantaloid& Q = A.Q();
  r.presheaves = enumerate_weights(A, Variance::Contra, cap);
  r.copresheaves = enumerate_weights(A, Variance::Co, cap);
  r.complete = true;
  for (const auto& mu : r.presheaves) {
    auto s = sup(A, mu);
    r.sups.push_back(s ? *s : -1);
    if (!s && r.complete) {
      r.complete = false;
      r.missing_sup = mu;
    }
  }
  r.dual_complete = true;
  for (const auto& lam : r.copresheaves) {
    auto s = inf(A, lam);
    r.infs.push_back(s ? *s : -1);
    if (!s && r.dual_complete) {
      r.dual_complete = false;
      r.missing_inf = lam;
    }
  }
  if (!r.complete || !r.dual_complete) return r;

  // sup μ = ⋁_a μ(a)⊗a and inf λ = ⋀_a λ(a)⇒a, the underlying join and meet taken
  // as the sup of ⋁ Y(−) and the inf of ⋁ Y†(−).
  for (std::size_t i = 0; i < r.presheaves.size() && r.formulas_agree; ++i) {
    const Weight& mu = r.presheaves[i];
    Weight acc = bottom_weight(A, Variance::Contra, mu.type);
    for (int a = 0; a < A.size(); ++a) {
      auto t = tensor(A, Arrow{A.type(a), mu.type, mu.w[a]}, a);
      if (!t) {
        r.formulas_agree = false;
        break;
      }
      for (int x = 0; x < A.size(); ++x)
        acc.w[x] = Q.join(A.type(x), mu.type, acc.w[x], A.hom(x, *t));
    }
    if (r.formulas_agree) r.formulas_agree = sup(A, acc) == r.sups[i];
  }
  for (std::size_t i = 0; i < r.copresheaves.size() && r.formulas_agree; ++i) {
    const Weight& lam = r.copresheaves[i];
    Weight acc = bottom_weight(A, Variance::Co, lam.type);
    for (int a = 0; a < A.size(); ++a) {
      auto t = cotensor(A, Arrow{lam.type, A.type(a), lam.w[a]}, a);
      if (!t) {
        r.formulas_agree = false;
        break;
      }
      for (int x = 0; x < A.size(); ++x)
        acc.w[x] = Q.join(lam.type, A.type(x), acc.w[x], A.hom(*t, x));
    }
    if (r.formulas_agree) r.formulas_agree = inf(A, acc) == r.infs[i];
  }
  return r;
}

LawReport closure_operator_check(const ClosureOperator& C) {
  const QCategory& P = *C.space->cat;
  const Quantaloid& Q = P.Q();
  LawReport out;
  for (const auto& v : validate_functor(QFunctor{C.space->cat, C.space->cat, C.map}).violations)
    out.push_back({"functor-" + v.law, v.witness});
  for (int i = 0; i < P.size(); ++i) {
    if (P.type(C(i)) != P.type(i)) continue;
    if (!Q.leq(P.type(i), P.type(i), Q.unit(P.type(i)), P.hom(i, C(i))))
      out.push_back({"inflation", P.name(i)});
    if (C(C(i)) != C(i)) out.push_back({"idempotence", P.name(i)});
  }
  return out;
}

ClosureOperator identity_closure(const PresheafSpacePtr& P) {
  return {P, identity_map(P->size())};
}

ClosureOperator trivial_closure(const PresheafSpacePtr& P) {
  ClosureOperator C{P, std::vector<int>(P->size())};
  for (int i = 0; i < P->size(); ++i)
    C.map[i] = P->at(top_weight(*P->base, P->variance, P->items[i].type));
  return C;
}

std::vector<int> closure_fixed_points(const ClosureOperator& C) {
  std::vector<int> out;
  for (int i = 0; i < C.space->size(); ++i)
    if (C(i) == i) out.push_back(i);
  return out;
}

CategoryPtr fixed_point_category(const ClosureOperator& C) {
  return std::make_shared<const QCategory>(full_subcategory(*C.space->cat, closure_fixed_points(C)));
}

ContinuityReport continuity_check(const QFunctor& F, const ClosureOperator& C,
                                  const ClosureOperator& D) {
  const PresheafSpace& PA = *C.space;
  const PresheafSpace& PB = *D.space;
  const QFunctor ra = image_functor(F, ImageKind::Ra, PA, PB);
  const QFunctor la = image_functor(F, ImageKind::La, PA, PB);
  const QCategory& P = *PB.cat;
  const Quantaloid& Q = P.Q();
  ContinuityReport r{true, true};
  for (int i = 0; i < PA.size(); ++i) {
    const int lhs = ra(C(i)), rhs = D(ra(i));
    const int X = P.type(lhs);
    if (!Q.leq(X, X, Q.unit(X), P.hom(lhs, rhs))) r.inequality = false;
  }
  for (int j = 0; j < PB.size(); ++j)
    if (D(j) == j && C(la(j)) != la(j)) r.preimage = false;
  return r;
}

QDistributor closure_to_context(const ClosureOperator& C) {
  const PresheafSpace& P = *C.space;
  const std::vector<int> fixed = closure_fixed_points(C);
  std::vector<Weight> items;
  for (int i : fixed) items.push_back(P.items[i]);
  CategoryPtr fix = weight_category(*P.base, P.variance, items, "c");
  std::vector<int> m;
  for (int x = 0; x < P.base->size(); ++x)
    for (const auto& mu : items) m.push_back(mu.w[x]);
  return make_distributor(P.base, fix, std::move(m));
}

KanExtension kan_extension_pointwise(const QFunctor& F, const QFunctor& K, KanDir dir) {
  if (F.dom.get() != K.dom.get())
    throw Error(Errc::CategoryMismatch, "Kan extension: F and K have different domains");
  const QCategory& A = *F.dom;
  const QCategory& C = *K.cod;
  KanExtension out;
  std::vector<int> map(C.size());
  for (int c = 0; c < C.size(); ++c) {
    Weight w{C.type(c), std::vector<int>(A.size())};
    for (int a = 0; a < A.size(); ++a) w.w[a] = dir == KanDir::Left ? C.hom(K(a), c) : C.hom(c, K(a));
    auto v = dir == KanDir::Left ? colimit(F, w) : limit(F, w);
    if (!v) {
      out.failing = c;
      return out;
    }
    map[c] = *v;
  }
  out.functor = QFunctor{K.cod, F.cod, std::move(map)};
  return out;
}

}  // namespace qcat
