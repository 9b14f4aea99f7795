#include <functional>

#include "doctest.h"
#include "oracle.hpp"
#include "qcat/error.hpp"
#include "qcat/quantale.hpp"
#include "qcat/quantaloid.hpp"

using namespace qcat;

namespace {

int obj(const Quantaloid& Q, const char* name) { return *Q.find_object(name); }
int arr(const Quantaloid& Q, int X, int Y, const char* label) { return *Q.hom(X, Y).find(label); }

// Runs `fn(X,Y,Z)` over every object triple.
void each_triple(const Quantaloid& Q, const std::function<void(int, int, int)>& fn) {
  for (int X = 0; X < Q.num_objects(); ++X)
    for (int Y = 0; Y < Q.num_objects(); ++Y)
      for (int Z = 0; Z < Q.num_objects(); ++Z) fn(X, Y, Z);
}

std::vector<Quantaloid> fixtures() {
  return {build_boolean(), quantaloid_from_divisible_quantale(build_lukasiewicz_chain(3)),
          quantaloid_from_divisible_quantale(build_boolean_algebra(2))};
}

}  // namespace

TEST_CASE("boolean quantaloid") {
  Quantaloid B = build_boolean();
  CHECK(B.num_objects() == 1);
  CHECK(B.hom(0, 0).size() == 2);
  CHECK(B.compose(0, 0, 0, 1, 1) == 1);
  CHECK(B.compose(0, 0, 0, 1, 0) == 0);
  CHECK(B.unit(0) == B.top(0, 0));
  CHECK(validate_quantaloid(B).empty());
}

TEST_CASE("lukasiewicz chains") {
  QuantaleSpec q3 = build_lukasiewicz_chain(3);
  CHECK(q3.elements == std::vector<std::string>{"0", "1/2", "1"});
  CHECK(q3.tensor[1][1] == 0);
  CHECK(q3.tensor[1][2] == 1);
  QuantaleSpec q5 = build_lukasiewicz_chain(5);
  CHECK(q5.tensor[3][2] == 1);
  CHECK_THROWS_AS(build_lukasiewicz_chain(1), Error);
  try {
    build_lukasiewicz_chain(1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidSize);
  }
  for (int n = 2; n <= 7; ++n) CHECK(validate_quantale(build_lukasiewicz_chain(n)).empty());
}

TEST_CASE("divisibility") {
  // Oracle: closed-form Łukasiewicz residual, all pairs.
  for (int n = 2; n <= 6; ++n) {
    oracle::Luk L{n - 1};
    bool expect = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (L.tensor(a, L.impl(a, b)) != L.meet(a, b)) expect = false;
    CHECK(check_divisible(build_lukasiewicz_chain(n)).divisible == expect);
  }
  CHECK(check_divisible(build_godel_chain(4)).divisible);
  CHECK(check_divisible(build_boolean_algebra(2)).divisible);

  QuantaleSpec nm = build_nilpotent_minimum_chain(5);
  CHECK(validate_quantale(nm).empty());
  DivisibilityResult r = check_divisible(nm);
  REQUIRE_FALSE(r.divisible);
  REQUIRE(r.witness.has_value());
  CHECK(nm.elements[r.witness->first] == "3/4");
  CHECK(nm.elements[r.witness->second] == "1/4");
  // Oracle scan of the nilpotent minimum residual.
  auto nmt = [](int a, int b) { return a + b <= 4 ? 0 : std::min(a, b); };
  std::vector<std::pair<int, int>> expected;
  for (int a = 4; a >= 0; --a)
    for (int b = 0; b <= 4; ++b)
      if (nmt(a, oracle::brute_impl(nmt, 4, a, b)) != std::min(a, b)) expected.emplace_back(a, b);
  CHECK(r.violations == expected);
  CHECK_THROWS_AS(quantaloid_from_divisible_quantale(nm), Error);
}

TEST_CASE("quantaloid from divisible quantale") {
  Quantaloid Q = quantaloid_from_divisible_quantale(build_lukasiewicz_chain(3));
  const int one = obj(Q, "1"), half = obj(Q, "1/2");
  const int alpha = arr(Q, one, half, "1/2");
  const int beta = arr(Q, half, one, "1/2");
  oracle::Luk L{2};
  CHECK(Q.hom(one, one).label(Q.compose(one, half, one, beta, alpha)) == "1/2");
  CHECK(L.compose(1, 1, 1) == 1);
  CHECK(validate_quantaloid(Q).empty());
  // Composition agrees with the closed form on every triple.
  each_triple(Q, [&](int X, int Y, int Z) {
    for (int f = 0; f < Q.hom(X, Y).size(); ++f)
      for (int g = 0; g < Q.hom(Y, Z).size(); ++g) {
        // Arrow indices of QL3 coincide with numerators over 2.
        CHECK(Q.compose(X, Y, Z, g, f) == L.compose(Y, g, f));
      }
  });
  Quantaloid B = quantaloid_from_divisible_quantale(build_lukasiewicz_chain(2));
  CHECK(B.num_objects() == 2);
  const int b0 = obj(B, "0"), b1 = obj(B, "1");
  CHECK(B.hom(b1, b1).size() == 2);
  CHECK(B.hom(b0, b0).size() == 1);
  CHECK(B.hom(b0, b1).size() == 1);
  CHECK(B.hom(b1, b0).size() == 1);
  for (int g = 0; g < 2; ++g)
    for (int f = 0; f < 2; ++f) CHECK(B.compose(b1, b1, b1, g, f) == (g & f));
  each_triple(Q, [&](int X, int Y, int) {
    for (int b = 0; b < Q.hom(X, Y).size(); ++b) CHECK(Q.compose(X, Y, Y, Q.unit(Y), b) == b);
  });
}

TEST_CASE("validation reports") {
  CHECK(validate_quantaloid(quantaloid_from_divisible_quantale(build_lukasiewicz_chain(4))).empty());
  Quantaloid B = build_boolean();
  Quantaloid bad = B.with_compose_entry(0, 0, 0, 1, 1, 0);
  LawReport rep = validate_quantaloid(bad);
  bool unit_cited = false;
  for (const auto& v : rep)
    if (v.law.rfind("unit", 0) == 0) unit_cited = true;
  CHECK(unit_cited);
  CHECK_THROWS_AS(Quantaloid({"*"}, {FiniteLattice::chain({"0", "1"})}, {1},
                             std::vector<std::vector<int>>{{0, 0, 1}}),
                  Error);
}

TEST_CASE("typed compose and residual") {
  Quantaloid B = build_boolean();
  CHECK(compose(B, {0, 0, 1}, {0, 0, 1}).idx == 1);
  CHECK(residual(B, Side::Left, {0, 0, 0}, {0, 0, 1}).idx == 0);
  Quantaloid Q = quantaloid_from_divisible_quantale(build_lukasiewicz_chain(3));
  const int one = obj(Q, "1"), half = obj(Q, "1/2"), zero = obj(Q, "0");
  CHECK_THROWS_AS(compose(Q, {one, half, 0}, {one, zero, 0}), Error);
  // h=0 ∈ hom(1,1), f=1/2 ∈ hom(1,1/2): join-scan over hom(1/2,1) by the closed form.
  oracle::Luk L{2};
  int best = 0;
  for (int g = 0; g <= 1; ++g)
    if (L.compose(1, g, 1) <= 0) best = std::max(best, g);
  Arrow r = residual(Q, Side::Left, {one, one, 0}, {one, half, 1});
  CHECK(r.dom == half);
  CHECK(r.cod == one);
  CHECK(r.idx == best);
  CHECK(r.idx == 0);
  for (const Quantaloid& F : fixtures())
    each_triple(F, [&](int X, int Y, int Z) {
      for (int f = 0; f < F.hom(X, Y).size(); ++f)
        CHECK(F.compose(X, Y, Z, F.bot(Y, Z), f) == F.bot(X, Z));
      for (int h = 0; h < F.hom(X, Z).size(); ++h)
        CHECK(F.lres(X, Y, Z, h, F.bot(X, Y)) == F.top(Y, Z));
    });
}

TEST_CASE("arrow adjunctions") {
  Quantaloid B = build_boolean();
  CHECK(arrow_adjoint_check(B, {0, 0, 1}, {0, 0, 1}));
  CHECK_FALSE(arrow_adjoint_check(B, {0, 0, 1}, {0, 0, 0}));
  Quantaloid Q = quantaloid_from_divisible_quantale(build_lukasiewicz_chain(3));
  const int half = obj(Q, "1/2");
  CHECK(arrow_adjoint_check(Q, {half, half, Q.unit(half)}, {half, half, Q.unit(half)}));
  for (const Quantaloid& F : fixtures())
    for (int X = 0; X < F.num_objects(); ++X)
      for (int Y = 0; Y < F.num_objects(); ++Y)
        for (int f = 0; f < F.hom(X, Y).size(); ++f) {
          int found = -1, count = 0;
          for (int g = 0; g < F.hom(Y, X).size(); ++g)
            if (arrow_adjoint_check(F, {X, Y, f}, {Y, X, g})) {
              found = g;
              ++count;
            }
          CHECK(count <= 1);
          if (count == 1) {
            CHECK(found == F.rres(X, Y, Y, f, F.unit(Y)));
            CHECK(f == F.lres(Y, X, Y, F.unit(Y), found));
          }
        }
}

TEST_CASE("residuation calculus holds exhaustively") {
  for (const Quantaloid& Q : fixtures()) {
    each_triple(Q, [&](int X, int Y, int Z) {
      const FiniteLattice &XY = Q.hom(X, Y), &YZ = Q.hom(Y, Z), &XZ = Q.hom(X, Z);
      for (int f = 0; f < XY.size(); ++f)
        for (int g = 0; g < YZ.size(); ++g)
          for (int h = 0; h < XZ.size(); ++h) {
            const bool a = XZ.leq(Q.compose(X, Y, Z, g, f), h);
            CHECK(a == YZ.leq(g, Q.lres(X, Y, Z, h, f)));
            CHECK(a == XY.leq(f, Q.rres(X, Y, Z, g, h)));
            // (7)
            CHECK(XZ.leq(Q.compose(X, Y, Z, Q.lres(X, Y, Z, h, f), f), h));
            CHECK(XZ.leq(Q.compose(X, Y, Z, g, Q.rres(X, Y, Z, g, h)), h));
            for (int h2 = 0; h2 < XZ.size(); ++h2) {
              // (2)
              CHECK(Q.lres(X, Y, Z, XZ.meet(h, h2), f) ==
                    YZ.meet(Q.lres(X, Y, Z, h, f), Q.lres(X, Y, Z, h2, f)));
              CHECK(Q.rres(X, Y, Z, g, XZ.meet(h, h2)) ==
                    XY.meet(Q.rres(X, Y, Z, g, h), Q.rres(X, Y, Z, g, h2)));
            }
            for (int f2 = 0; f2 < XY.size(); ++f2)  // (3)
              CHECK(Q.lres(X, Y, Z, h, XY.join(f, f2)) ==
                    YZ.meet(Q.lres(X, Y, Z, h, f), Q.lres(X, Y, Z, h, f2)));
            for (int g2 = 0; g2 < YZ.size(); ++g2)
              CHECK(Q.rres(X, Y, Z, YZ.join(g, g2), h) ==
                    XY.meet(Q.rres(X, Y, Z, g, h), Q.rres(X, Y, Z, g2, h)));
          }
      for (int W = 0; W < Q.num_objects(); ++W) {
        // W is a fourth object for (4),(5),(6),(8).
        const FiniteLattice &WX = Q.hom(W, X), &WY = Q.hom(W, Y), &WZ = Q.hom(W, Z);
        for (int e = 0; e < WX.size(); ++e)
          for (int f = 0; f < XY.size(); ++f)
            for (int g = 0; g < YZ.size(); ++g)
              for (int h = 0; h < WZ.size(); ++h) {
                // h: W→Z, e: W→X, f: X→Y, g: Y→Z.
                // (5) (h↙e)↙f = h↙(f∘e)
                CHECK(Q.lres(X, Y, Z, Q.lres(W, X, Z, h, e), f) ==
                      Q.lres(W, Y, Z, h, Q.compose(W, X, Y, f, e)));
                // (5) e↘(f↘(g↘h))... f↘(g↘h') = (g∘f)↘h' with h': W→Z
                CHECK(Q.rres(W, X, Y, f, Q.rres(W, Y, Z, g, h)) ==
                      Q.rres(W, X, Z, Q.compose(X, Y, Z, g, f), h));
              }
        // (6) (g↘h)↙f = g↘(h↙f) for f: W→X, g: Y→Z, h: W→Z, result X→Y.
        for (int f = 0; f < WX.size(); ++f)
          for (int g = 0; g < YZ.size(); ++g)
            for (int h = 0; h < WZ.size(); ++h)
              CHECK(Q.lres(W, X, Y, Q.rres(W, Y, Z, g, h), f) ==
                    Q.rres(X, Y, Z, g, Q.lres(W, X, Z, h, f)));
        // (4) (h↙g)∘(g↙f) ≤ h↙f with f: W→X, g: W→Y, h: W→Z.
        for (int f = 0; f < WX.size(); ++f)
          for (int g = 0; g < WY.size(); ++g)
            for (int h = 0; h < WZ.size(); ++h)
              CHECK(Q.leq(X, Z, Q.compose(X, Y, Z, Q.lres(W, Y, Z, h, g), Q.lres(W, X, Y, g, f)),
                          Q.lres(W, X, Z, h, f)));
        // (4) (f↘g)∘(g↘h) ≤ f↘h with h: W→X... f: Y→Z, g: X→Z, h: W→Z.
        for (int f = 0; f < YZ.size(); ++f)
          for (int g = 0; g < Q.hom(X, Z).size(); ++g)
            for (int h = 0; h < WZ.size(); ++h)
              CHECK(Q.leq(W, Y,
                          Q.compose(W, X, Y, Q.rres(X, Y, Z, f, g), Q.rres(W, X, Z, g, h)),
                          Q.rres(W, Y, Z, f, h)));
        // (8) h∘(g↙f) ≤ (h∘g)↙f with f: W→X, g: W→Y, h: Y→Z.
        for (int f = 0; f < WX.size(); ++f)
          for (int g = 0; g < WY.size(); ++g)
            for (int h = 0; h < YZ.size(); ++h)
              CHECK(Q.leq(X, Z, Q.compose(X, Y, Z, h, Q.lres(W, X, Y, g, f)),
                          Q.lres(W, X, Z, Q.compose(W, Y, Z, h, g), f)));
        // (8) (g↘h)∘f ≤ g↘(h∘f) with f: W→X, g: Y→Z, h: X→Z.
        for (int f = 0; f < WX.size(); ++f)
          for (int g = 0; g < YZ.size(); ++g)
            for (int h = 0; h < Q.hom(X, Z).size(); ++h)
              CHECK(Q.leq(W, Y, Q.compose(W, X, Y, Q.rres(X, Y, Z, g, h), f),
                          Q.rres(W, Y, Z, g, Q.compose(W, X, Z, h, f))));
      }
    });
  }
}

TEST_CASE("top and bottom identities") {
  for (const Quantaloid& Q : fixtures())
    each_triple(Q, [&](int X, int Y, int Z) {
      for (int f = 0; f < Q.hom(X, Y).size(); ++f) {
        CHECK(Q.lres(X, X, Y, f, Q.unit(X)) == f);
        CHECK(Q.rres(X, Y, Y, Q.unit(Y), f) == f);
        CHECK(Q.lres(X, Y, Z, Q.top(X, Z), f) == Q.top(Y, Z));
      }
      for (int g = 0; g < Q.hom(Y, Z).size(); ++g) {
        CHECK(Q.compose(X, Y, Z, g, Q.bot(X, Y)) == Q.bot(X, Z));
        CHECK(Q.rres(X, Y, Z, g, Q.top(X, Z)) == Q.top(X, Y));
      }
      for (int h = 0; h < Q.hom(X, Z).size(); ++h)
        CHECK(Q.rres(X, Y, Z, Q.bot(Y, Z), h) == Q.top(X, Y));
    });
}

TEST_CASE("girard structures") {
  auto two = std::make_shared<const Quantaloid>(build_boolean());
  GirardStructure G = girard_structure(two, {0});
  CHECK(G.neg(0, 0, 1) == 0);
  CHECK(G.neg(0, 0, 0) == 1);

  auto ql3 = std::make_shared<const Quantaloid>(
      quantaloid_from_divisible_quantale(build_lukasiewicz_chain(3)));
  std::vector<int> forced;
  for (int X = 0; X < ql3->num_objects(); ++X) forced.push_back(ql3->bot(X, X));
  GirardReport rep = check_girard(*ql3, forced);
  CHECK_FALSE(rep.ok());
  CHECK(rep.witness.has_value());
  CHECK(find_girard_families(*ql3).empty());
  CHECK_THROWS_AS(girard_structure(ql3, forced), Error);

  auto b4 = std::make_shared<const Quantaloid>(
      quantaloid_from_divisible_quantale(build_boolean_algebra(2)));
  std::vector<int> bots;
  for (int X = 0; X < b4->num_objects(); ++X) bots.push_back(b4->bot(X, X));
  CHECK(check_girard(*b4, bots).ok());
  auto fams = find_girard_families(*b4);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0] == bots);
}

TEST_CASE("girard identities") {
  for (int atoms : {0, 1, 2, 3}) {
    auto Q = std::make_shared<const Quantaloid>(
        quantaloid_from_divisible_quantale(build_boolean_algebra(atoms)));
    std::vector<int> d;
    for (int X = 0; X < Q->num_objects(); ++X) d.push_back(Q->bot(X, X));
    GirardStructure G = girard_structure(Q, d);
    each_triple(*Q, [&](int X, int Y, int Z) {
      for (int f = 0; f < Q->hom(X, Y).size(); ++f) {
        CHECK(G.neg(Y, X, G.neg(X, Y, f)) == f);
        for (int g = 0; g < Q->hom(Y, Z).size(); ++g) {
          // (2) g∘f = d_Z↙(f↘(g↘d_Z))
          const int gd = Q->rres(Z, Y, Z, g, d[Z]);
          const int fgd = Q->rres(Z, X, Y, f, gd);
          CHECK(Q->compose(X, Y, Z, g, f) == Q->lres(Z, X, Z, d[Z], fgd));
          // (5) (d_Y↙g)↘f = g↙(f↘d_Y)
          const int dyg = Q->lres(Y, Z, Y, d[Y], g);
          const int fdy = Q->rres(Y, X, Y, f, d[Y]);
          CHECK(Q->rres(X, Z, Y, dyg, f) == Q->lres(Y, X, Z, g, fdy));
        }
        for (int h = 0; h < Q->hom(X, Z).size(); ++h) {
          // (3) h↙f = (d_X↙h)↘(d_X↙f)
          CHECK(Q->lres(X, Y, Z, h, f) ==
                Q->rres(Y, Z, X, Q->lres(X, Z, X, d[X], h), Q->lres(X, Y, X, d[X], f)));
        }
      }
      for (int g = 0; g < Q->hom(Y, Z).size(); ++g)
        for (int h = 0; h < Q->hom(X, Z).size(); ++h)
          // (4) g↘h = (g↘d_Z)↙(h↘d_Z)
          CHECK(Q->rres(X, Y, Z, g, h) ==
                Q->lres(Z, X, Y, Q->rres(Z, Y, Z, g, d[Z]), Q->rres(Z, X, Z, h, d[Z])));
    });
  }
}
