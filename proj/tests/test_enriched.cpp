#include <doctest.h>

#include "qcat/error.hpp"
#include "qcat/fixtures.hpp"
#include "qcat/random.hpp"

using namespace qcat;
namespace fx = qcat::fixtures;

namespace {

CategoryPtr make(const QuantaloidPtr& Q, std::vector<int> types, std::vector<int> hom) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < types.size(); ++i) names.push_back(std::string(1, 'x' + i));
  return std::make_shared<const QCategory>(Q, names, std::move(types), std::move(hom));
}

}  // namespace

TEST_CASE("discrete categories") {
  auto Q = fx::ql3();
  auto one = fx::discrete(Q, {"a"}, {2});
  CHECK(one->hom(0, 0) == Q->unit(2));
  CHECK(Q->hom(2, 2).label(one->hom(0, 0)) == "1");

  auto fuzzy = fx::discrete(Q, {"x"}, {1});
  CHECK(Q->hom(1, 1).label(fuzzy->hom(0, 0)) == "1/2");

  auto ab = fx::antichain2();
  CHECK(ab->hom(0, 0) == 1);
  CHECK(ab->hom(0, 1) == 0);
  CHECK(validate_category(*ab).empty());
  CHECK(validate_category(*one).empty());
  CHECK(validate_category(*fx::empty_category(Q)).empty());
}

TEST_CASE("validate_category reports transitivity witnesses") {
  auto A = make(fx::two(), {0, 0, 0}, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  auto rep = validate_category(*A);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].law == "transitivity");
  CHECK(rep[0].witness == "x,y,z");

  auto bad_unit = make(fx::two(), {0}, {0});
  REQUIRE(!validate_category(*bad_unit).empty());
  CHECK(validate_category(*bad_unit)[0].law == "unit");
}

TEST_CASE("out-of-hom entries raise TypeError") {
  // hom(1/2, 1/2) has only two arrows, so index 2 (degree 1) is outside it.
  try {
    make(fx::ql3(), {1, 1}, {1, 2, 0, 1});
    FAIL("expected TypeError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TypeError);
  }
}

TEST_CASE("underlying preorder") {
  auto P = underlying_preorder(*fx::antichain2());
  CHECK(P.skeletal);
  CHECK(P.le(0, 0));
  CHECK(!P.le(0, 1));

  auto iso = make(fx::two(), {0, 0}, {1, 1, 1, 1});
  auto I = underlying_preorder(*iso);
  CHECK(I.iso(0, 1));
  CHECK(!I.skeletal);

  auto PA = presheaf_category(fx::chain2(), Variance::Contra);
  CHECK(underlying_preorder(*PA->cat).skeletal);
  auto PfA = presheaf_category(fx::discrete(fx::ql3(), {"x", "y"}, {1, 2}), Variance::Co);
  CHECK(underlying_preorder(*PfA->cat).skeletal);
}

TEST_CASE("functor validation") {
  auto A = fx::antichain2();
  auto rep = validate_functor(identity_functor(A));
  CHECK(rep.valid());
  CHECK(rep.fully_faithful);

  QFunctor collapse{A, A, {0, 0}};
  auto c = validate_functor(collapse);
  CHECK(c.valid());
  CHECK(!c.fully_faithful);

  QFunctor down{fx::chain2(), fx::antichain2(), {0, 1}};
  auto d = validate_functor(down);
  CHECK(!d.valid());
  CHECK(d.violations[0].law == "hom");
}

TEST_CASE("adjoint functor checks") {
  auto C = fx::chain2();
  CHECK(functor_adjoint_check(identity_functor(C), identity_functor(C)));

  // F collapses to the bottom, G to the top: F(a) <= b iff a <= G(b).
  QFunctor F{C, C, {0, 0}};
  QFunctor G{C, C, {1, 1}};
  CHECK(functor_adjoint_check(F, G));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK((F(a) <= b) == (a <= G(b)));
  CHECK(!functor_adjoint_check(G, F));

  // The inclusion of the antichain into the chain has no right adjoint.
  QFunctor inc{fx::antichain2(), C, {0, 1}};
  CHECK(validate_functor(inc).valid());
  CHECK(find_right_adjoints(inc).empty());
  for (int g0 = 0; g0 < 2; ++g0)
    for (int g1 = 0; g1 < 2; ++g1)
      CHECK(!functor_adjoint_check(inc, QFunctor{C, inc.dom, {g0, g1}}));

  CHECK_THROWS_AS(functor_adjoint_check(F, QFunctor{fx::antichain2(), C, {0, 1}}), Error);
}

TEST_CASE("underlying order characterisations on random categories") {
  Rng rng(7);
  for (auto Q : {fx::two(), fx::ql3()}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto A = random_category(Q, 1 + rng.below(4), rng);
      REQUIRE(validate_category(*A).empty());
      auto P = underlying_preorder(*A);
      for (int x = 0; x < A->size(); ++x)
        for (int y = 0; y < A->size(); ++y) {
          if (A->type(x) != A->type(y)) continue;
          bool right = true, left = true;
          for (int z = 0; z < A->size(); ++z) {
            right = right && Q->leq(A->type(y), A->type(z), A->hom(y, z), A->hom(x, z));
            left = left && Q->leq(A->type(z), A->type(x), A->hom(z, x), A->hom(z, y));
          }
          CHECK(P.le(x, y) == right);
          CHECK(P.le(x, y) == left);
        }
    }
  }
}

TEST_CASE("adjunctions satisfy FGF = F and GFG = G") {
  Rng rng(11);
  int found = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto Q = trial % 2 ? fx::ql3() : fx::two();
    auto A = random_category(Q, 1 + rng.below(3), rng);
    auto B = random_category(Q, 1 + rng.below(3), rng);
    for (const auto& F : enumerate_functors(A, B)) {
      for (const auto& G : find_right_adjoints(F)) {
        ++found;
        CHECK(functor_adjoint_check(F, G));
        CHECK(functor_iso(compose_functors(F, compose_functors(G, F)), F));
        CHECK(functor_iso(compose_functors(G, compose_functors(F, G)), G));
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("fully faithful functors are essentially injective; composition preserves validity") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto Q = trial % 2 ? fx::ql3() : fx::two();
    auto B = random_category(Q, 3, rng);
    QFunctor G = random_functor_into(B, 3, rng);
    QFunctor F = random_functor_into(G.dom, 3, rng);
    auto rf = validate_functor(F), rg = validate_functor(G);
    REQUIRE(rf.valid());
    REQUIRE(rg.valid());
    auto rgf = validate_functor(compose_functors(G, F));
    CHECK(rgf.valid());
    if (rf.fully_faithful && rg.fully_faithful) CHECK(rgf.fully_faithful);
    if (rf.fully_faithful) {
      auto P = underlying_preorder(*F.dom);
      for (int x = 0; x < F.dom->size(); ++x)
        for (int y = 0; y < F.dom->size(); ++y)
          if (F(x) == F(y)) CHECK(P.iso(x, y));
    }
  }
}
