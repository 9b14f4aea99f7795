#include "qcat/random.hpp"

namespace qcat {

int random_arrow(const Quantaloid& Q, int X, int Y, Rng& rng) {
  return rng.below(Q.hom(X, Y).size());
}

namespace {

void close_transitively(const Quantaloid& Q, const std::vector<int>& t, std::vector<int>& hom) {
  const int n = static_cast<int>(t.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const int c = Q.compose(t[x], t[y], t[z], hom[y * n + z], hom[x * n + y]);
          const int j = Q.join(t[x], t[z], hom[x * n + z], c);
          if (j != hom[x * n + z]) {
            hom[x * n + z] = j;
            changed = true;
          }
        }
  }
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

CategoryPtr random_category(const QuantaloidPtr& Q, int n, Rng& rng) {
  std::vector<int> t(n);
  for (int& x : t) x = rng.below(Q->num_objects());
  std::vector<int> hom(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = rng.coin(0.4) ? random_arrow(*Q, t[x], t[y], rng) : Q->bot(t[x], t[y]);
      if (x == y) a = Q->join(t[x], t[x], a, Q->unit(t[x]));
      hom[x * n + y] = a;
    }
  close_transitively(*Q, t, hom);
  return std::make_shared<const QCategory>(Q, numbered("c", n), std::move(t), std::move(hom));
}

CategoryPtr random_discrete(const QuantaloidPtr& Q, int n, Rng& rng, const std::string& prefix) {
  std::vector<int> t(n);
  for (int& x : t) x = rng.below(Q->num_objects());
  return std::make_shared<const QCategory>(
      discrete_category(Q, QTypedSet{numbered(prefix, n), std::move(t)}));
}

QFunctor random_functor_into(const CategoryPtr& B, int n, Rng& rng) {
  const Quantaloid& Q = B->Q();
  if (B->size() == 0) n = 0;
  std::vector<int> map(n), t(n);
  for (int x = 0; x < n; ++x) {
    map[x] = rng.below(B->size());
    t[x] = B->type(map[x]);
  }
  std::vector<int> hom(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int cap = B->hom(map[x], map[y]);
      int a = rng.coin(0.5) ? Q.meet(t[x], t[y], random_arrow(Q, t[x], t[y], rng), cap)
                            : Q.bot(t[x], t[y]);
      if (rng.coin(0.4)) a = cap;
      if (x == y) a = Q.join(t[x], t[x], a, Q.unit(t[x]));
      hom[x * n + y] = a;
    }
  close_transitively(Q, t, hom);
  auto A = std::make_shared<const QCategory>(B->quantaloid_ptr(), numbered("d", n), std::move(t),
                                             std::move(hom));
  return {A, B, std::move(map)};
}

QDistributor random_distributor(const CategoryPtr& A, const CategoryPtr& B, Rng& rng) {
  const Quantaloid& Q = A->Q();
  Matrix m{A->types(), B->types(), std::vector<int>(A->size() * B->size())};
  for (int x = 0; x < A->size(); ++x)
    for (int y = 0; y < B->size(); ++y)
      m.at(x, y) = rng.coin(0.6) ? random_arrow(Q, A->type(x), B->type(y), rng)
                                 : Q.bot(A->type(x), B->type(y));
  m = mat_compose(Q, hom_matrix(*B), mat_compose(Q, m, hom_matrix(*A)));
  return {A, B, std::move(m)};
}

Weight random_presheaf(const QCategory& A, int X, Rng& rng) {
  Weight w{X, std::vector<int>(A.size())};
  for (int x = 0; x < A.size(); ++x)
    w.w[x] = rng.coin(0.6) ? random_arrow(A.Q(), A.type(x), X, rng) : A.Q().bot(A.type(x), X);
  return presheaf_closure(A, w);
}

Weight random_copresheaf(const QCategory& A, int X, Rng& rng) {
  Weight w{X, std::vector<int>(A.size())};
  for (int x = 0; x < A.size(); ++x)
    w.w[x] = rng.coin(0.6) ? random_arrow(A.Q(), X, A.type(x), rng) : A.Q().bot(X, A.type(x));
  return copresheaf_closure(A, w);
}

namespace {

QDistributor pull_back(const QDistributor& chi, const QFunctor* F, const QFunctor* G) {
  const CategoryPtr& A = F ? F->dom : chi.dom;
  const CategoryPtr& B = G ? G->dom : chi.cod;
  std::vector<int> m;
  for (int x = 0; x < A->size(); ++x)
    for (int y = 0; y < B->size(); ++y) m.push_back(chi(F ? (*F)(x) : x, G ? (*G)(y) : y));
  return make_distributor(A, B, std::move(m));
}

}  // namespace

InfomorphismChain random_infomorphism_chain(const QuantaloidPtr& Q, int n, Rng& rng) {
  auto A2 = random_category(Q, n, rng);
  auto B = random_category(Q, n, rng);
  QDistributor chi = random_distributor(A2, B, rng);
  QFunctor F2 = random_functor_into(A2, n, rng);
  QFunctor F = random_functor_into(F2.dom, n, rng);
  QFunctor G = random_functor_into(B, n, rng);
  QFunctor G2 = random_functor_into(G.dom, n, rng);
  QFunctor F2F = compose_functors(F2, F);
  QFunctor GG2 = compose_functors(G, G2);
  QDistributor phi = pull_back(chi, &F2F, nullptr);
  QDistributor psi = pull_back(chi, &F2, &G);
  QDistributor omega = pull_back(chi, nullptr, &GG2);
  return {{phi, psi, F, G}, {psi, omega, F2, G2}};
}

}  // namespace qcat
