#include <functional>

#include "qcat/distributor.hpp"
#include "qcat/error.hpp"

namespace qcat {

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = std::hash<int>{}(w.type);
  for (int a : w.w) h = h * 1000003u ^ std::hash<int>{}(a);
  return h;
}

Matrix presheaf_matrix(const QCategory& A, const Weight& mu) {
  return Matrix{A.types(), {mu.type}, mu.w};
}

Matrix copresheaf_matrix(const QCategory& A, const Weight& lam) {
  return Matrix{{lam.type}, A.types(), lam.w};
}

Weight presheaf_of(const Matrix& column) {
  if (column.cols() != 1) throw Error(Errc::StructureError, "presheaf needs a single column");
  return {column.col_types[0], column.v};
}

Weight copresheaf_of(const Matrix& row) {
  if (row.rows() != 1) throw Error(Errc::StructureError, "copresheaf needs a single row");
  return {row.row_types[0], row.v};
}

bool is_presheaf(const QCategory& A, const Weight& mu) {
  const Quantaloid& Q = A.Q();
  const int X = mu.type;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y)
      if (!Q.leq(A.type(x), X, Q.compose(A.type(x), A.type(y), X, mu.w[y], A.hom(x, y)),
                 mu.w[x]))
        return false;
  return true;
}

bool is_copresheaf(const QCategory& A, const Weight& lam) {
  const Quantaloid& Q = A.Q();
  const int X = lam.type;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y)
      if (!Q.leq(X, A.type(y), Q.compose(X, A.type(x), A.type(y), A.hom(x, y), lam.w[x]),
                 lam.w[y]))
        return false;
  return true;
}

Weight presheaf_closure(const QCategory& A, const Weight& w) {
  return presheaf_of(mat_compose(A.Q(), presheaf_matrix(A, w), hom_matrix(A)));
}

Weight copresheaf_closure(const QCategory& A, const Weight& w) {
  return copresheaf_of(mat_compose(A.Q(), hom_matrix(A), copresheaf_matrix(A, w)));
}

Weight top_weight(const QCategory& A, Variance v, int X) {
  Weight out{X, std::vector<int>(A.size())};
  for (int x = 0; x < A.size(); ++x)
    out.w[x] = v == Variance::Contra ? A.Q().top(A.type(x), X) : A.Q().top(X, A.type(x));
  return out;
}

Weight bottom_weight(const QCategory& A, Variance v, int X) {
  Weight out{X, std::vector<int>(A.size())};
  for (int x = 0; x < A.size(); ++x)
    out.w[x] = v == Variance::Contra ? A.Q().bot(A.type(x), X) : A.Q().bot(X, A.type(x));
  return out;
}

int presheaf_hom(const QCategory& A, const Weight& mu, const Weight& lam) {
  const Quantaloid& Q = A.Q();
  const FiniteLattice& L = Q.hom(mu.type, lam.type);
  int acc = L.top();
  for (int x = 0; x < A.size(); ++x)
    acc = L.meet(acc, Q.lres(A.type(x), mu.type, lam.type, lam.w[x], mu.w[x]));
  return acc;
}

int copresheaf_hom(const QCategory& A, const Weight& mu, const Weight& lam) {
  const Quantaloid& Q = A.Q();
  const FiniteLattice& L = Q.hom(mu.type, lam.type);
  int acc = L.top();
  for (int x = 0; x < A.size(); ++x)
    acc = L.meet(acc, Q.rres(mu.type, lam.type, A.type(x), lam.w[x], mu.w[x]));
  return acc;
}

int weight_hom(const QCategory& A, Variance v, const Weight& a, const Weight& b) {
  return v == Variance::Contra ? presheaf_hom(A, a, b) : copresheaf_hom(A, a, b);
}

std::uint64_t weight_space_bound(const QCategory& A, Variance v, int X) {
  constexpr std::uint64_t kSaturate = std::uint64_t{1} << 62;
  std::uint64_t bound = 1;
  for (int x = 0; x < A.size(); ++x) {
    const std::uint64_t k = static_cast<std::uint64_t>(
        v == Variance::Contra ? A.Q().hom(A.type(x), X).size() : A.Q().hom(X, A.type(x)).size());
    bound = bound > kSaturate / k ? kSaturate : bound * k;
  }
  return bound;
}

namespace {

bool compatible(const QCategory& A, Variance v, int X, const std::vector<int>& w, int a) {
  const Quantaloid& Q = A.Q();
  const int ta = A.type(a);
  for (int b = 0; b < a; ++b) {
    const int tb = A.type(b);
    if (v == Variance::Contra) {
      if (!Q.leq(ta, X, Q.compose(ta, tb, X, w[b], A.hom(a, b)), w[a])) return false;
      if (!Q.leq(tb, X, Q.compose(tb, ta, X, w[a], A.hom(b, a)), w[b])) return false;
    } else {
      if (!Q.leq(X, ta, Q.compose(X, tb, ta, A.hom(b, a), w[b]), w[a])) return false;
      if (!Q.leq(X, tb, Q.compose(X, ta, tb, A.hom(a, b), w[a]), w[b])) return false;
    }
  }
  return true;
}

void extend(const QCategory& A, Variance v, int X, std::vector<int>& w, int a,
            std::vector<Weight>& out) {
  if (a == A.size()) {
    out.push_back({X, w});
    return;
  }
  const int k = v == Variance::Contra ? A.Q().hom(A.type(a), X).size()
                                      : A.Q().hom(X, A.type(a)).size();
  for (int e = 0; e < k; ++e) {
    w[a] = e;
    if (compatible(A, v, X, w, a)) extend(A, v, X, w, a + 1, out);
  }
}

}  // namespace

std::vector<Weight> enumerate_weights(const QCategory& A, Variance v, std::uint64_t cap) {
  std::vector<Weight> out;
  const int n = A.Q().num_objects();
  for (int X = 0; X < n; ++X) {
    const std::uint64_t bound = weight_space_bound(A, v, X);
    if (bound > cap)
      throw Error(Errc::PresheafSpaceTooLarge,
                  "candidate bound " + std::to_string(bound) + " for type " +
                      A.Q().object_name(X) + " exceeds cap " + std::to_string(cap));
  }
  for (int X = 0; X < n; ++X) {
    std::vector<int> w(A.size());
    extend(A, v, X, w, 0, out);
  }
  return out;
}

int PresheafSpace::find(const Weight& w) const {
  auto it = index.find(w);
  return it == index.end() ? -1 : it->second;
}

int PresheafSpace::at(const Weight& w) const {
  const int i = find(w);
  if (i < 0) throw Error(Errc::StructureError, "weight not in the enumerated space");
  return i;
}

CategoryPtr weight_category(const QCategory& A, Variance v, const std::vector<Weight>& items,
                            const std::string& prefix) {
  const int n = static_cast<int>(items.size());
  std::vector<std::string> names(n);
  std::vector<int> types(n);
  std::vector<int> hom(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    names[i] = prefix + std::to_string(i);
    types[i] = items[i].type;
    for (int j = 0; j < n; ++j) hom[i * n + j] = weight_hom(A, v, items[i], items[j]);
  }
  return std::make_shared<QCategory>(A.quantaloid_ptr(), std::move(names), std::move(types),
                                     std::move(hom));
}

PresheafSpacePtr presheaf_category(const CategoryPtr& A, Variance v, std::uint64_t cap) {
  auto P = std::make_shared<PresheafSpace>();
  P->base = A;
  P->variance = v;
  P->items = enumerate_weights(*A, v, cap);
  P->cat = weight_category(*A, v, P->items, v == Variance::Contra ? "p" : "q");
  for (int i = 0; i < P->size(); ++i) P->index.emplace(P->items[i], i);
  return P;
}

Weight yoneda_weight(const QCategory& A, Variance v, int a) {
  Weight out{A.type(a), std::vector<int>(A.size())};
  for (int x = 0; x < A.size(); ++x) out.w[x] = v == Variance::Contra ? A.hom(x, a) : A.hom(a, x);
  return out;
}

QFunctor yoneda(const PresheafSpace& P) {
  QFunctor Y{P.base, P.cat, std::vector<int>(P.base->size())};
  for (int a = 0; a < P.base->size(); ++a) Y.map[a] = P.at(yoneda_weight(*P.base, P.variance, a));
  return Y;
}

Weight image_weight(const QFunctor& F, ImageKind kind, const Weight& w) {
  const QCategory& A = *F.dom;
  const QCategory& B = *F.cod;
  const Quantaloid& Q = A.Q();
  const int X = w.type;
  switch (kind) {
    case ImageKind::Ra:
    case ImageKind::Nra: {
      Weight out{X, std::vector<int>(B.size())};
      for (int y = 0; y < B.size(); ++y) {
        const int ty = B.type(y);
        const bool contra = kind == ImageKind::Ra;
        const FiniteLattice& L = contra ? Q.hom(ty, X) : Q.hom(X, ty);
        int acc = L.bot();
        for (int x = 0; x < A.size(); ++x) {
          const int tx = A.type(x);
          acc = L.join(acc, contra ? Q.compose(ty, tx, X, w.w[x], B.hom(y, F(x)))
                                   : Q.compose(X, tx, ty, B.hom(F(x), y), w.w[x]));
        }
        out.w[y] = acc;
      }
      return out;
    }
    case ImageKind::La:
    case ImageKind::Nla: {
      Weight out{X, std::vector<int>(A.size())};
      for (int x = 0; x < A.size(); ++x) out.w[x] = w.w[F(x)];
      return out;
    }
  }
  throw Error(Errc::Unsupported, "unknown image kind");
}

QFunctor image_functor(const QFunctor& F, ImageKind kind, const PresheafSpace& PA,
                       const PresheafSpace& PB) {
  const bool forward = kind == ImageKind::Ra || kind == ImageKind::Nra;
  const Variance v = kind == ImageKind::Ra || kind == ImageKind::La ? Variance::Contra
                                                                     : Variance::Co;
  if (PA.base.get() != F.dom.get() || PB.base.get() != F.cod.get() || PA.variance != v ||
      PB.variance != v)
    throw Error(Errc::CategoryMismatch, "image functor: spaces do not match the functor");
  const PresheafSpace& S = forward ? PA : PB;
  const PresheafSpace& T = forward ? PB : PA;
  QFunctor out{S.cat, T.cat, std::vector<int>(S.size())};
  for (int i = 0; i < S.size(); ++i) out.map[i] = T.at(image_weight(F, kind, S.items[i]));
  return out;
}

LawReport validate_infomorphism(const Infomorphism& i) {
  const QDistributor& phi = i.source;
  const QDistributor& psi = i.target;
  if (i.F.dom.get() != phi.dom.get() || i.F.cod.get() != psi.dom.get() ||
      i.G.dom.get() != psi.cod.get() || i.G.cod.get() != phi.cod.get())
    throw Error(Errc::Mismatch, "infomorphism functors do not match the distributors");
  LawReport out;
  for (int x = 0; x < phi.dom->size(); ++x)
    for (int y = 0; y < psi.cod->size(); ++y)
      if (phi(x, i.G(y)) != psi(i.F(x), y))
        out.push_back({"infomorphism", phi.dom->name(x) + "," + psi.cod->name(y)});
  return out;
}

Infomorphism identity_infomorphism(const QDistributor& phi) {
  return {phi, phi, identity_functor(phi.dom), identity_functor(phi.cod)};
}

Infomorphism compose_infomorphisms(const Infomorphism& j, const Infomorphism& i) {
  if (i.target.dom.get() != j.source.dom.get() || i.target.cod.get() != j.source.cod.get() ||
      !(i.target.m == j.source.m))
    throw Error(Errc::Mismatch, "target of the first infomorphism is not the source of the second");
  return {i.source, j.target, compose_functors(j.F, i.F), compose_functors(i.G, j.G)};
}

QDistributor yoneda_graph(const PresheafSpacePtr& PA) {
  return graph_cograph(yoneda(*PA)).graph;
}

Infomorphism yoneda_infomorphism(const QFunctor& F, const PresheafSpacePtr& PA,
                                 const PresheafSpacePtr& PB) {
  return {yoneda_graph(PA), yoneda_graph(PB), F, image_functor(F, ImageKind::La, *PA, *PB)};
}

}  // namespace qcat
