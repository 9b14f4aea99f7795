#include <doctest.h>

#include "oracle.hpp"
#include "qcat/adjunction.hpp"
#include "qcat/error.hpp"
#include "qcat/fixtures.hpp"
#include "qcat/random.hpp"

using namespace qcat;
namespace fx = qcat::fixtures;

namespace {

unsigned mask(const Weight& w) {
  unsigned m = 0;
  for (std::size_t i = 0; i < w.w.size(); ++i)
    if (w.w[i]) m |= 1u << i;
  return m;
}

std::set<std::pair<unsigned, unsigned>> masks(const ConceptLattice& L) {
  std::set<std::pair<unsigned, unsigned>> out;
  for (const auto& c : L.concepts) out.insert({mask(c.mu), mask(c.lam)});
  return out;
}

std::vector<std::vector<bool>> crisp(int na, int nb, unsigned bits) {
  std::vector<std::vector<bool>> R(na, std::vector<bool>(nb));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) R[x][y] = bits >> (x * nb + y) & 1u;
  return R;
}

bool same_concepts(const ConceptLattice& a, const ConceptLattice& b) {
  if (a.size() != b.size()) return false;
  for (int k = 0; k < a.size(); ++k)
    if (a.concepts[k].mu != b.concepts[k].mu || a.concepts[k].lam != b.concepts[k].lam) return false;
  return a.cat->homs() == b.cat->homs();
}

GirardStructure girard_of(const QuantaloidPtr& Q) {
  auto families = find_girard_families(*Q);
  REQUIRE(!families.empty());
  return girard_structure(Q, families.front());
}

QDistributor random_fuzzy_context(const QuantaloidPtr& Q, int na, int nb, Rng& rng) {
  return random_distributor(random_discrete(Q, na, rng, "x"), random_discrete(Q, nb, rng, "y"), rng);
}

}  // namespace

TEST_CASE("Isbell transforms") {
  auto phi = fx::ctx1();
  CHECK(isbell_transform(phi, IsbellDir::Up, Weight{0, {1, 0}}).w == std::vector<int>{1, 1});
  CHECK(isbell_transform(phi, IsbellDir::Up, Weight{0, {0, 0}}).w == std::vector<int>{1, 1});
  CHECK(isbell_transform(phi, IsbellDir::Down, Weight{0, {0, 1}}).w == std::vector<int>{1, 1});
  CHECK_THROWS_AS(isbell_transform(phi, IsbellDir::Up, Weight{0, {1}}), Error);

  Rng rng(71);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto A = random_category(Q, 1 + rng.below(3), rng);
      auto B = random_category(Q, 1 + rng.below(3), rng);
      auto psi = random_distributor(A, B, rng);
      const int X = rng.below(Q->num_objects()), Y = rng.below(Q->num_objects());
      auto mu = random_presheaf(*A, X, rng);
      auto lam = random_copresheaf(*B, Y, rng);
      CHECK(copresheaf_hom(*B, isbell_transform(psi, IsbellDir::Up, mu), lam) ==
            presheaf_hom(*A, mu, isbell_transform(psi, IsbellDir::Down, lam)));
      CHECK(isbell_transform(psi, IsbellDir::Up, bottom_weight(*A, Variance::Contra, X)) ==
            top_weight(*B, Variance::Co, X));
      for (int x = 0; x < A->size(); ++x) {
        auto row = isbell_transform(psi, IsbellDir::Up, yoneda_weight(*A, Variance::Contra, x));
        for (int y = 0; y < B->size(); ++y) CHECK(row.w[y] == psi(x, y));
      }
      // With φ = A the up transform is the upper-bound operator A↙μ.
      auto ub = isbell_transform(identity_distributor(A), IsbellDir::Up, mu);
      CHECK(ub == copresheaf_of(mat_lres(*Q, hom_matrix(*A), presheaf_matrix(*A, mu))));
    }
  }
}

TEST_CASE("Kan transforms") {
  auto phi = fx::ctx1();
  CHECK(kan_transform(phi, KanKind::Star, Weight{0, {1, 0}}).w == std::vector<int>{1, 0});
  CHECK(kan_transform(phi, KanKind::Lower, Weight{0, {1, 0}}).w == std::vector<int>{1, 0});
  CHECK(kan_transform(phi, KanKind::Star, Weight{0, {0, 0}}).w == std::vector<int>{0, 0});

  Rng rng(73);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto A = random_category(Q, 1 + rng.below(3), rng);
      auto B = random_category(Q, 1 + rng.below(3), rng);
      auto psi = random_distributor(A, B, rng);
      const int X = rng.below(Q->num_objects()), Y = rng.below(Q->num_objects());
      auto lam = random_presheaf(*B, X, rng);
      auto mu = random_presheaf(*A, Y, rng);
      CHECK(presheaf_hom(*A, kan_transform(psi, KanKind::Star, lam), mu) ==
            presheaf_hom(*B, lam, kan_transform(psi, KanKind::Lower, mu)));
      auto lamd = random_copresheaf(*B, X, rng);
      auto mud = random_copresheaf(*A, Y, rng);
      CHECK(copresheaf_hom(*A, kan_transform(psi, KanKind::LowerDag, lamd), mud) ==
            copresheaf_hom(*B, lamd, kan_transform(psi, KanKind::Dag, mud)));
      CHECK(kan_transform(psi, KanKind::Star, bottom_weight(*B, Variance::Contra, X)) ==
            bottom_weight(*A, Variance::Contra, X));
    }
  }
}

TEST_CASE("functors as Kan adjunctions") {
  Rng rng(79);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto B = random_category(Q, 1 + rng.below(3), rng);
      QFunctor F = random_functor_into(B, 1 + rng.below(2), rng);
      auto gc = graph_cograph(F);
      for (const auto& mu : enumerate_weights(*F.dom, Variance::Contra, kDefaultCap))
        CHECK(kan_transform(gc.cograph, KanKind::Star, mu) == image_weight(F, ImageKind::Ra, mu));
      for (const auto& lam : enumerate_weights(*B, Variance::Contra, kDefaultCap))
        CHECK(kan_transform(gc.graph, KanKind::Star, lam) == image_weight(F, ImageKind::La, lam));
      for (const auto& mu : enumerate_weights(*F.dom, Variance::Co, kDefaultCap))
        CHECK(kan_transform(gc.graph, KanKind::Dag, mu) == image_weight(F, ImageKind::Nra, mu));
      for (const auto& lam : enumerate_weights(*B, Variance::Co, kDefaultCap))
        CHECK(kan_transform(gc.cograph, KanKind::Dag, lam) == image_weight(F, ImageKind::Nla, lam));
    }
  }
}

TEST_CASE("concept lattices of CTX1") {
  auto phi = fx::ctx1();
  for (auto alg : {Algorithm::Brute, Algorithm::Generated}) {
    auto M = concept_lattice(phi, ConceptKind::Isbell, alg);
    CHECK(masks(M) == std::set<std::pair<unsigned, unsigned>>{{0b01, 0b11}, {0b11, 0b10}});
    auto K = concept_lattice(phi, ConceptKind::Kan, alg);
    CHECK(masks(K) == std::set<std::pair<unsigned, unsigned>>{{0b00, 0b00}, {0b01, 0b01}, {0b11, 0b11}});
    CHECK(concept_order_check(M));
    CHECK(concept_order_check(K));
  }
}

TEST_CASE("crisp contexts agree with classical FCA and rough-set oracles") {
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb)
      for (unsigned bits = 0; bits < (1u << (na * nb)); ++bits) {
        auto R = crisp(na, nb, bits);
        auto phi = na && nb ? fx::crisp_context(R)
                            : make_distributor(fx::discrete(fx::two(), std::vector<std::string>(na, "x"), std::vector<int>(na, 0)),
                                               fx::discrete(fx::two(), std::vector<std::string>(nb, "y"), std::vector<int>(nb, 0)), {});
        auto Mb = concept_lattice(phi, ConceptKind::Isbell, Algorithm::Brute);
        auto Mg = concept_lattice(phi, ConceptKind::Isbell, Algorithm::Generated);
        auto Kb = concept_lattice(phi, ConceptKind::Kan, Algorithm::Brute);
        auto Kg = concept_lattice(phi, ConceptKind::Kan, Algorithm::Generated);
        CHECK(same_concepts(Mb, Mg));
        CHECK(same_concepts(Kb, Kg));
        CHECK(masks(Mb) == oracle::fca_concepts(na, nb, R));
        CHECK(masks(Kb) == oracle::rough_concepts(na, nb, R));
      }
}

TEST_CASE("fuzzy contexts over QL3 agree with the Łukasiewicz oracle") {
  Rng rng(83);
  auto Q = fx::ql3();
  for (int trial = 0; trial < 30; ++trial) {
    auto phi = random_fuzzy_context(Q, 1 + rng.below(3), 1 + rng.below(3), rng);
    std::vector<int> ta = phi.dom->types(), tb = phi.cod->types();
    std::vector<std::vector<int>> m(ta.size(), std::vector<int>(tb.size()));
    for (std::size_t x = 0; x < ta.size(); ++x)
      for (std::size_t y = 0; y < tb.size(); ++y) m[x][y] = phi(x, y);
    for (auto kind : {ConceptKind::Isbell, ConceptKind::Kan}) {
      auto brute = concept_lattice(phi, kind, Algorithm::Brute);
      auto gen = concept_lattice(phi, kind, Algorithm::Generated);
      CHECK(same_concepts(brute, gen));
      CHECK(concept_order_check(gen));
      std::set<oracle::FuzzyWeight> got;
      for (const auto& c : gen.concepts) got.insert({c.mu.type, c.mu.w});
      CHECK(got == (kind == ConceptKind::Isbell ? oracle::fuzzy_isbell(2, ta, tb, m)
                                                : oracle::fuzzy_kan(2, ta, tb, m)));
      auto rep = is_complete(*gen.cat);
      CHECK(rep.complete);
      CHECK(rep.consistent());
      CHECK(underlying_preorder(*gen.cat).skeletal);
    }
  }
}

TEST_CASE("round trips and the isomorphism triangle") {
  Rng rng(89);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto A = random_category(Q, 1 + rng.below(3), rng);
      auto B = random_category(Q, 1 + rng.below(3), rng);
      auto phi = random_distributor(A, B, rng);
      auto PA = presheaf_category(A, Variance::Contra);
      auto C = isbell_closure(phi, PA);
      auto I = kan_interior(phi, PA);
      CHECK(closure_operator_check(C).empty());
      for (int i = 0; i < PA->size(); ++i) {
        const int X = PA->items[i].type;
        CHECK(Q->leq(X, X, Q->unit(X), PA->cat->hom(i, C(i))));
        CHECK(Q->leq(X, X, Q->unit(X), PA->cat->hom(I(i), i)));
        CHECK(I(I(i)) == I(i));
      }
      for (auto kind : {ConceptKind::Isbell, ConceptKind::Kan}) {
        auto L = concept_lattice(phi, kind, Algorithm::Generated);
        CHECK(concept_order_check(L));
        std::set<Weight> lams;
        for (const auto& c : L.concepts) lams.insert(c.lam);
        CHECK(static_cast<int>(lams.size()) == L.size());
        for (const auto& c : L.concepts)
          if (kind == ConceptKind::Isbell)
            CHECK(isbell_transform(phi, IsbellDir::Down, c.lam) == c.mu);
          else
            CHECK(kan_transform(phi, KanKind::Star, c.lam) == c.mu);
      }
    }
  }
}

TEST_CASE("distributors are determined by their transforms") {
  auto Q = fx::ql3();
  auto A = fx::discrete(Q, {"1", "2"}, {2, 2});
  auto B = fx::discrete(Q, {"a", "b"}, {2, 2});
  auto PA = presheaf_category(A, Variance::Contra);
  auto PB = presheaf_category(B, Variance::Contra);
  std::set<std::vector<Weight>> ups, stars;
  int count = 0;
  std::vector<QDistributor> all;
  for (int code = 0; code < 81; ++code) {
    std::vector<int> m;
    for (int c = code, k = 0; k < 4; ++k, c /= 3) m.push_back(c % 3);
    all.push_back(make_distributor(A, B, m));
  }
  for (const auto& phi : all) {
    std::vector<Weight> up, star;
    for (const auto& mu : PA->items) up.push_back(isbell_transform(phi, IsbellDir::Up, mu));
    for (const auto& lam : PB->items) star.push_back(kan_transform(phi, KanKind::Star, lam));
    ups.insert(up);
    stars.insert(star);
    ++count;
  }
  CHECK(static_cast<int>(ups.size()) == count);
  CHECK(static_cast<int>(stars.size()) == count);
  // Larger distributors give smaller up transforms.
  for (int i = 0; i < 81; i += 7)
    for (int j = 0; j < 81; j += 5)
      if (dist_leq(all[i], all[j]))
        for (const auto& mu : PA->items)
          CHECK(copresheaf_hom(*B, isbell_transform(all[j], IsbellDir::Up, mu),
                               isbell_transform(all[i], IsbellDir::Up, mu)) == Q->unit(mu.type));

  std::set<std::vector<int>> crisp_ups;
  for (unsigned bits = 0; bits < 16; ++bits) {
    auto phi = fx::crisp_context(crisp(2, 2, bits));
    auto P = presheaf_category(phi.dom, Variance::Contra);
    std::vector<int> up;
    for (const auto& mu : P->items) up.push_back(static_cast<int>(mask(isbell_transform(phi, IsbellDir::Up, mu))));
    crisp_ups.insert(up);
  }
  CHECK(crisp_ups.size() == 16);
}

TEST_CASE("special lattices") {
  Rng rng(97);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto A = random_category(Q, 1 + rng.below(2), rng);
      auto P = presheaf_category(A, Variance::Contra);
      auto M = concept_lattice(yoneda_graph(P), ConceptKind::Isbell, Algorithm::Generated);
      CHECK(find_isomorphism(*M.cat, *P->cat).has_value());
      QFunctor F = random_functor_into(A, 2, rng);
      if (validate_functor(F).fully_faithful) {
        auto PF = presheaf_category(F.dom, Variance::Contra);
        auto K = concept_lattice(graph_cograph(F).cograph, ConceptKind::Kan, Algorithm::Generated);
        std::set<Weight> lams;
        for (const auto& c : K.concepts) lams.insert(c.lam);
        CHECK(lams == std::set<Weight>(PF->items.begin(), PF->items.end()));
      }
    }
  }
}

TEST_CASE("MacNeille completion") {
  CHECK(macneille_completion(fx::chain2()).lattice.size() == 2);
  CHECK(macneille_completion(fx::antichain2()).lattice.size() == 4);
  CHECK(macneille_completion(fx::empty_category(fx::two())).lattice.size() == 1);
  CHECK(oracle::macneille_cut_count(2, {{true, true}, {false, true}}) == 2);
  CHECK(oracle::macneille_cut_count(2, {{true, false}, {false, true}}) == 4);
  auto mc = macneille_completion(fx::chain2());
  CHECK(find_isomorphism(*mc.lattice.cat, *fx::chain2()).has_value());

  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = random_category(trial % 2 ? fx::ql3() : fx::two(), 1 + rng.below(3), rng);
    auto M = macneille_completion(A);
    auto MM = macneille_completion(M.lattice.cat);
    CHECK(find_isomorphism(*MM.lattice.cat, *M.lattice.cat).has_value());
    CHECK(validate_functor(M.embedding).fully_faithful);
    if (A->size() <= 2) CHECK(is_complete(*M.lattice.cat, std::uint64_t{1} << 26).complete);
    for (const auto& mu : enumerate_weights(*A, Variance::Contra, kDefaultCap))
      if (auto s = sup(*A, mu)) CHECK(M.embedding(*s) == sup(*M.lattice.cat, image_weight(M.embedding, ImageKind::Ra, mu)));
    for (const auto& lam : enumerate_weights(*A, Variance::Co, kDefaultCap))
      if (auto s = inf(*A, lam)) CHECK(M.embedding(*s) == inf(*M.lattice.cat, image_weight(M.embedding, ImageKind::Nra, lam)));
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto P = presheaf_category(random_category(trial % 2 ? fx::ql3() : fx::two(), 1 + rng.below(2), rng), Variance::Contra);
    CHECK(find_isomorphism(*macneille_completion(P->cat).lattice.cat, *P->cat).has_value());
  }
  // The embedding of a non-skeletal category identifies isomorphic objects.
  auto twins = std::make_shared<const QCategory>(fx::two(), std::vector<std::string>{"x", "y"}, std::vector<int>{0, 0},
                                                 std::vector<int>{1, 1, 1, 1});
  auto mt = macneille_completion(twins);
  CHECK(mt.lattice.size() == 1);
  CHECK(mt.embedding(0) == mt.embedding(1));
}

TEST_CASE("negation of distributors") {
  auto two = fx::two();
  auto g = girard_of(two);
  CHECK(g.family() == std::vector<int>{0});
  auto phi = fx::ctx1();
  auto neg = negate_distributor(phi, g);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(neg(y, x) == 1 - phi(x, y));
  CHECK(validate_distributor(neg).empty());

  auto b4 = fx::boolean4();
  auto gb = girard_of(b4);
  CHECK_THROWS_AS(negate_distributor(phi, gb), Error);
  Rng rng(103);
  for (auto Q : {two, b4}) {
    auto G = girard_of(Q);
    for (int trial = 0; trial < 25; ++trial) {
      auto A = random_category(Q, 1 + rng.below(3), rng);
      auto B = random_category(Q, 1 + rng.below(3), rng);
      auto p = random_distributor(A, B, rng);
      auto n = negate_distributor(p, G);
      CHECK(validate_distributor(n).empty());
      CHECK(negate_distributor(n, G).m == p.m);
      auto nA = negate_distributor(identity_distributor(A), G);
      for (int x = 0; x < A->size(); ++x)
        for (int y = 0; y < A->size(); ++y) CHECK(nA(y, x) == G.neg(A->type(x), A->type(y), A->hom(x, y)));
    }
  }
}

TEST_CASE("Girard duality") {
  auto g = girard_of(fx::two());
  auto ctx = girard_duality_check(fx::ctx1(), g);
  CHECK(ctx.ok());
  CHECK(ctx.K.size() == 3);
  CHECK(ctx.M.size() == 3);

  auto single = identity_distributor(fx::discrete(fx::two(), {"*"}, {0}));
  auto s = girard_duality_check(single, g);
  CHECK(s.ok());
  CHECK(s.K.size() == 2);
  CHECK(s.M.size() == 2);

  // Every Isbell lattice over 2 is a Kan lattice: M(φ) ≅ K(¬φ).
  for (unsigned bits = 0; bits < 64; ++bits) {
    auto phi = fx::crisp_context(crisp(2, 3, bits));
    auto M = concept_lattice(phi, ConceptKind::Isbell, Algorithm::Generated);
    auto K = concept_lattice(negate_distributor(phi, g), ConceptKind::Kan, Algorithm::Generated);
    CHECK(find_isomorphism(*M.cat, *K.cat).has_value());
  }
}

TEST_CASE("functoriality of concept lattices") {
  auto phi = fx::ctx1();
  for (auto kind : {LatticeKind::M, LatticeKind::K}) {
    auto L = concept_lattice(phi, kind == LatticeKind::M ? ConceptKind::Isbell : ConceptKind::Kan, Algorithm::Generated);
    auto id = concept_functor_image(identity_infomorphism(phi), kind, L, L);
    CHECK(id.adjoint);
    for (int k = 0; k < L.size(); ++k) {
      CHECK(id.left(k) == k);
      CHECK(id.right(k) == k);
    }
  }

  // CTX1 restricted to object 1 and attribute b maps into CTX1 along the inclusions.
  auto sub = make_distributor(fx::discrete(fx::two(), {"1"}, {0}), phi.cod, {1, 1});
  Infomorphism inc{sub, phi, QFunctor{sub.dom, phi.dom, {0}}, identity_functor(phi.cod)};
  CHECK(validate_infomorphism(inc).empty());
  auto Ms = concept_lattice(sub, ConceptKind::Isbell, Algorithm::Generated);
  auto Mt = concept_lattice(phi, ConceptKind::Isbell, Algorithm::Generated);
  CHECK(concept_functor_image(inc, LatticeKind::M, Ms, Mt).adjoint);
  auto Ks = concept_lattice(sub, ConceptKind::Kan, Algorithm::Generated);
  auto Kt = concept_lattice(phi, ConceptKind::Kan, Algorithm::Generated);
  CHECK(concept_functor_image(inc, LatticeKind::K, Ks, Kt).adjoint);

  Infomorphism broken{sub, phi, QFunctor{sub.dom, phi.dom, {1}}, identity_functor(phi.cod)};
  try {
    concept_functor_image(broken, LatticeKind::M, Ms, Mt);
    FAIL("expected InvalidInfomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidInfomorphism);
  }

  Rng rng(107);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto ch = random_infomorphism_chain(Q, 2, rng);
      auto ji = compose_infomorphisms(ch.j, ch.i);
      for (auto kind : {LatticeKind::M, LatticeKind::K}) {
        const auto ck = kind == LatticeKind::M ? ConceptKind::Isbell : ConceptKind::Kan;
        auto L1 = concept_lattice(ch.i.source, ck, Algorithm::Generated);
        auto L2 = concept_lattice(ch.i.target, ck, Algorithm::Generated);
        auto L3 = concept_lattice(ch.j.target, ck, Algorithm::Generated);
        auto a = concept_functor_image(ch.i, kind, L1, L2);
        auto b = concept_functor_image(ch.j, kind, L2, L3);
        auto c = concept_functor_image(ji, kind, L1, L3);
        CHECK(a.adjoint);
        CHECK(b.adjoint);
        CHECK(c.adjoint);
        if (kind == LatticeKind::M) {
          CHECK(compose_functors(b.left, a.left).map == c.left.map);
          CHECK(compose_functors(a.right, b.right).map == c.right.map);
        } else {
          CHECK(compose_functors(a.left, b.left).map == c.left.map);
          CHECK(compose_functors(b.right, a.right).map == c.right.map);
        }
      }
    }
  }
}

TEST_CASE("density") {
  Rng rng(109);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto A = random_category(Q, 1 + rng.below(2), rng);
      CHECK(density_check(yoneda(*presheaf_category(A, Variance::Contra)), DensityDir::Sup).dense);
      CHECK(density_check(yoneda(*presheaf_category(A, Variance::Co)), DensityDir::Inf).dense);
    }
  }
  auto point = fx::discrete(fx::two(), {"p"}, {0});
  QFunctor inc{point, fx::chain2(), {0}};
  auto r = density_check(inc, DensityDir::Sup);
  CHECK(!r.dense);
  CHECK(r.witness == 1);
}

TEST_CASE("dense factorizations") {
  auto phi = fx::ctx1();
  auto d = dense_factorization(phi);
  CHECK(d.ok());
  CHECK(mask(d.lattice.concepts[d.F(0)].mu) == 0b01);
  CHECK(mask(d.lattice.concepts[d.F(0)].lam) == 0b11);
  CHECK(mask(d.lattice.concepts[d.F(1)].mu) == 0b11);
  CHECK(mask(d.lattice.concepts[d.F(1)].lam) == 0b10);

  auto A = fx::chain2();
  auto e = dense_factorization(identity_distributor(A));
  CHECK(e.ok());
  CHECK(e.F.map == macneille_completion(A).embedding.map);

  Rng rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = dense_factorization(random_fuzzy_context(fx::ql3(), 3, 3, rng));
    CHECK(f.ok());
  }

  try {
    kan_dense_factorization(phi, nullptr);
    FAIL("expected Unsupported");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::Unsupported);
  }
  auto g2 = girard_of(fx::two());
  CHECK(kan_dense_factorization(phi, &g2).ok());
  auto gb = girard_of(fx::boolean4());
  for (int trial = 0; trial < 10; ++trial) {
    auto k = kan_dense_factorization(random_fuzzy_context(fx::boolean4(), 2, 2, rng), &gb);
    CHECK(k.ok());
  }
}

TEST_CASE("state property systems") {
  auto phi = fx::ctx1();
  auto M = concept_lattice(phi, ConceptKind::Isbell, Algorithm::Generated);
  std::vector<int> m;
  for (int x = 0; x < phi.dom->size(); ++x)
    for (const auto& c : M.concepts) m.push_back(c.mu.w[x]);
  CHECK(state_property_system_check(make_distributor(phi.dom, M.cat, m)).ok());

  auto P = presheaf_category(fx::chain2(), Variance::Contra);
  auto Y = yoneda_graph(P);
  CHECK(state_property_system_check(Y).ok());
  auto homs = P->cat->homs();
  int changed = -1;
  for (std::size_t i = 0; i < homs.size(); ++i)
    if (homs[i] == 0) {
      homs[i] = 1;
      changed = static_cast<int>(i);
      break;
    }
  REQUIRE(changed >= 0);
  auto coarse = std::make_shared<const QCategory>(P->cat->quantaloid_ptr(), P->cat->names(), P->cat->types(), homs);
  auto rep = state_property_system_check(make_distributor(P->base, coarse, Y.m.v));
  CHECK(!rep.ok());
  CHECK(!rep.witness.empty());
}
