#include "qcat/laws.hpp"

#include <sstream>

#include "qcat/adjunction.hpp"
#include "qcat/error.hpp"
#include "qcat/fixtures.hpp"
#include "qcat/quantale.hpp"
#include "qcat/random.hpp"

namespace qcat {

namespace fx = fixtures;

namespace {

class Tally {
 public:
  Tally(int criterion, std::string law) {
    r_.criterion = criterion;
    r_.law = std::move(law);
  }
  void pass() { ++r_.instances; }
  void check(bool ok, std::uint64_t seed, const std::function<std::string()>& witness) {
    ++r_.instances;
    if (ok) return;
    if (r_.failures++ == 0) {
      r_.seed = seed;
      r_.witness = witness();
    }
  }
  LawResult done() { return std::move(r_); }

 private:
  LawResult r_;
};

int scale(const LawConfig& c) { return c.profile == Profile::Medium ? 3 : 1; }

std::string describe(std::uint64_t seed, int k, const std::string& what) {
  return "instance " + std::to_string(k) + " (seed " + std::to_string(seed) + "): " + what;
}

QDistributor crisp(int na, int nb, unsigned bits) {
  std::vector<std::string> objs, attrs;
  for (int x = 0; x < na; ++x) objs.push_back(std::to_string(x + 1));
  for (int y = 0; y < nb; ++y) attrs.push_back(std::string(1, static_cast<char>('a' + y)));
  std::vector<int> m;
  for (int i = 0; i < na * nb; ++i) m.push_back(bits >> i & 1u ? 1 : 0);
  return make_distributor(fx::discrete(fx::two(), objs, std::vector<int>(na, 0)),
                          fx::discrete(fx::two(), attrs, std::vector<int>(nb, 0)), std::move(m));
}

QDistributor fuzzy_context(const QuantaloidPtr& Q, int na, int nb, Rng& rng) {
  return random_distributor(random_discrete(Q, na, rng, "x"), random_discrete(Q, nb, rng, "y"), rng);
}

bool same_concepts(const ConceptLattice& a, const ConceptLattice& b) {
  if (a.size() != b.size()) return false;
  for (int k = 0; k < a.size(); ++k)
    if (a.concepts[k].mu != b.concepts[k].mu || a.concepts[k].lam != b.concepts[k].lam) return false;
  return a.cat->homs() == b.cat->homs();
}

std::uint64_t space_size(const QDistributor& phi) {
  std::uint64_t s = 0;
  for (int X = 0; X < phi.dom->Q().num_objects(); ++X) s += weight_space_bound(*phi.dom, Variance::Contra, X);
  return s;
}

GirardStructure first_girard(const QuantaloidPtr& Q) {
  return girard_structure(Q, find_girard_families(*Q).front());
}

std::string weight_text(const QCategory& A, Variance v, const Weight& w) {
  std::string s = A.Q().object_name(w.type) + ":(";
  for (int a = 0; a < A.size(); ++a) {
    if (a) s += ",";
    s += v == Variance::Contra ? A.Q().hom(A.type(a), w.type).label(w.w[a])
                               : A.Q().hom(w.type, A.type(a)).label(w.w[a]);
  }
  return s + ")";
}

// 1
LawResult residuation(const LawConfig& cfg) {
  Tally t(1, "residuation");
  std::vector<std::pair<std::string, QuantaloidPtr>> fixtures = {
      {"2", fx::two()}, {"QL3", fx::ql3()}, {"QL5", fx::ql5()}, {"Boolean-4", fx::boolean4()}};
  if (cfg.mutate)
    fixtures[0].second = std::make_shared<const Quantaloid>(fx::two()->with_compose_entry(0, 0, 0, 0, 0, 1));
  for (const auto& [name, Q] : fixtures) {
    const int n = Q->num_objects();
    for (int X = 0; X < n; ++X)
      for (int Y = 0; Y < n; ++Y)
        for (int Z = 0; Z < n; ++Z) {
          const auto &XY = Q->hom(X, Y), &YZ = Q->hom(Y, Z), &XZ = Q->hom(X, Z);
          for (int f = 0; f < XY.size(); ++f)
            for (int g = 0; g < YZ.size(); ++g)
              for (int h = 0; h < XZ.size(); ++h) {
                const int gf = Q->compose(X, Y, Z, g, f);
                const int l = Q->lres(X, Y, Z, h, f), r = Q->rres(X, Y, Z, g, h);
                const bool a = XZ.leq(gf, h), b = YZ.leq(g, l), c = XY.leq(f, r);
                t.check(a == b && b == c, 0, [&] {
                  std::ostringstream os;
                  os << name << " X=" << Q->object_name(X) << " Y=" << Q->object_name(Y)
                     << " Z=" << Q->object_name(Z) << " f=" << XY.label(f) << " g=" << YZ.label(g)
                     << " h=" << XZ.label(h) << ": g∘f=" << XZ.label(gf) << " h↙f=" << YZ.label(l)
                     << " g↘h=" << XY.label(r);
                  return os.str();
                });
              }
        }
  }
  return t.done();
}

// 2
LawResult divisible_quantaloids(const LawConfig&) {
  Tally t(2, "divisible-quantale quantaloid");
  auto validated = [&](const QuantaleSpec& q, const std::string& name) {
    LawReport rep;
    try {
      rep = validate_quantaloid(quantaloid_from_divisible_quantale(q));
    } catch (const Error& e) {
      rep.push_back({"construction", e.what()});
    }
    t.check(rep.empty(), 0, [&] { return name + ": " + rep.front().law + " " + rep.front().witness; });
  };
  for (int n = 2; n <= 6; ++n) validated(build_lukasiewicz_chain(n), "lukasiewicz " + std::to_string(n));
  for (int atoms = 0; atoms <= 3; ++atoms)
    validated(build_boolean_algebra(atoms), "boolean algebra " + std::to_string(1 << atoms));
  const auto nm = build_nilpotent_minimum_chain(5);
  const auto d = check_divisible(nm);
  const bool ok = !d.divisible && d.witness && nm.elements[d.witness->first] == "3/4" &&
                  nm.elements[d.witness->second] == "1/4";
  t.check(ok, 0, [&] {
    if (d.divisible) return std::string("nilpotent minimum 5 accepted as divisible");
    return "nilpotent minimum 5 witness (" + nm.elements[d.witness->first] + "," +
           nm.elements[d.witness->second] + ")";
  });
  return t.done();
}

// 3
LawResult yoneda_lemma(const LawConfig& cfg) {
  Tally t(3, "yoneda");
  for (int k = 0; k < 20 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 3, k);
    Rng rng(seed);
    auto A = random_category(k % 2 ? fx::ql3() : fx::two(), 1 + rng.below(3), rng);
    bool ok = true;
    std::string bad;
    for (const auto& mu : enumerate_weights(*A, Variance::Contra, kDefaultCap))
      for (int a = 0; a < A->size() && ok; ++a)
        if (presheaf_hom(*A, yoneda_weight(*A, Variance::Contra, a), mu) != mu.w[a]) {
          ok = false;
          bad = "a=" + A->name(a) + " mu=" + weight_text(*A, Variance::Contra, mu);
        }
    t.check(ok, seed, [&] { return describe(seed, k, bad); });
  }
  return t.done();
}

// 4
LawResult adjunction_homs(const LawConfig& cfg) {
  Tally t(4, "isbell and kan adjunctions");
  for (int k = 0; k < 200 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 4, k);
    Rng rng(seed);
    auto Q = k % 2 ? fx::ql3() : fx::two();
    auto A = random_category(Q, 1 + rng.below(3), rng);
    auto B = random_category(Q, 1 + rng.below(3), rng);
    auto phi = random_distributor(A, B, rng);
    const int X = rng.below(Q->num_objects()), Y = rng.below(Q->num_objects());
    auto mu = random_presheaf(*A, X, rng);
    auto lam = random_copresheaf(*B, Y, rng);
    t.check(copresheaf_hom(*B, isbell_transform(phi, IsbellDir::Up, mu), lam) ==
                presheaf_hom(*A, mu, isbell_transform(phi, IsbellDir::Down, lam)),
            seed, [&] { return describe(seed, k, "isbell hom mismatch"); });
    auto lb = random_presheaf(*B, X, rng);
    auto ma = random_presheaf(*A, Y, rng);
    t.check(presheaf_hom(*A, kan_transform(phi, KanKind::Star, lb), ma) ==
                presheaf_hom(*B, lb, kan_transform(phi, KanKind::Lower, ma)),
            seed, [&] { return describe(seed, k, "kan hom mismatch"); });
  }
  return t.done();
}

// 5
LawResult functor_images(const LawConfig& cfg) {
  Tally t(5, "functor images as kan adjoints");
  for (int k = 0; k < 50 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 5, k);
    Rng rng(seed);
    auto B = random_category(k % 2 ? fx::ql3() : fx::two(), 1 + rng.below(3), rng);
    QFunctor F = random_functor_into(B, 1 + rng.below(2), rng);
    auto gc = graph_cograph(F);
    std::string bad;
    for (const auto& mu : enumerate_weights(*F.dom, Variance::Contra, kDefaultCap))
      if (kan_transform(gc.cograph, KanKind::Star, mu) != image_weight(F, ImageKind::Ra, mu)) bad = "(F^♮)* ≠ F^→";
    for (const auto& lam : enumerate_weights(*B, Variance::Contra, kDefaultCap))
      if (kan_transform(gc.graph, KanKind::Star, lam) != image_weight(F, ImageKind::La, lam)) bad = "(F_♮)* ≠ F^←";
    for (const auto& lam : enumerate_weights(*B, Variance::Co, kDefaultCap))
      if (kan_transform(gc.cograph, KanKind::Dag, lam) != image_weight(F, ImageKind::Nla, lam)) bad = "(F^♮)† ≠ F^⇐";
    for (const auto& mu : enumerate_weights(*F.dom, Variance::Co, kDefaultCap))
      if (kan_transform(gc.graph, KanKind::Dag, mu) != image_weight(F, ImageKind::Nra, mu)) bad = "(F_♮)† ≠ F^⇒";
    t.check(bad.empty(), seed, [&] { return describe(seed, k, bad); });
  }
  return t.done();
}

// 6
LawResult concept_oracles(const LawConfig& cfg) {
  Tally t(6, "generated and brute concept lattices agree");
  for (int na = 0; na <= 3; ++na)
    for (int nb = 0; nb <= 3; ++nb) {
      if ((na == 0) != (nb == 0)) continue;
      for (unsigned bits = 0; bits < (1u << (na * nb)); ++bits) {
        auto phi = crisp(na, nb, bits);
        for (auto kind : {ConceptKind::Isbell, ConceptKind::Kan}) {
          const bool ok = same_concepts(concept_lattice(phi, kind, Algorithm::Brute),
                                        concept_lattice(phi, kind, Algorithm::Generated));
          t.check(ok, 0, [&] {
            return "crisp " + std::to_string(na) + "x" + std::to_string(nb) + " bits " + std::to_string(bits) +
                   (kind == ConceptKind::Isbell ? " isbell" : " kan");
          });
        }
      }
    }
  const int m = concept_lattice(fx::ctx1(), ConceptKind::Isbell, Algorithm::Generated).size();
  const int k = concept_lattice(fx::ctx1(), ConceptKind::Kan, Algorithm::Generated).size();
  t.check(m == 2 && k == 3, 0, [&] {
    return "CTX1 gives " + std::to_string(m) + " isbell and " + std::to_string(k) + " kan concepts";
  });
  for (int i = 0; i < 30 * scale(cfg); ++i) {
    const auto seed = instance_seed(cfg.seed, 6, i);
    Rng rng(seed);
    QDistributor phi = fuzzy_context(fx::ql3(), 1 + rng.below(3), 1 + rng.below(3), rng);
    while (space_size(phi) > 10000) phi = fuzzy_context(fx::ql3(), 1 + rng.below(3), 1 + rng.below(3), rng);
    for (auto kind : {ConceptKind::Isbell, ConceptKind::Kan}) {
      const bool ok = same_concepts(concept_lattice(phi, kind, Algorithm::Brute),
                                    concept_lattice(phi, kind, Algorithm::Generated));
      t.check(ok, seed, [&] { return describe(seed, i, kind == ConceptKind::Isbell ? "isbell" : "kan"); });
    }
  }
  return t.done();
}

// 7
LawResult completeness(const LawConfig&) {
  Tally t(7, "completeness of concept lattices");
  auto half = fx::discrete(fx::ql3(), {"x"}, {1});
  auto uniform = make_distributor(half, fx::discrete(fx::ql3(), {"y"}, {1}), {1});
  std::vector<std::pair<std::string, CategoryPtr>> cats;
  for (const auto& [name, phi] : std::vector<std::pair<std::string, QDistributor>>{
           {"CTX1", fx::ctx1()}, {"chain2", identity_distributor(fx::chain2())}, {"half", uniform}}) {
    cats.push_back({"M(" + name + ")", concept_lattice(phi, ConceptKind::Isbell, Algorithm::Generated).cat});
    cats.push_back({"K(" + name + ")", concept_lattice(phi, ConceptKind::Kan, Algorithm::Generated).cat});
  }
  cats.push_back({"MacNeille(chain2)", macneille_completion(fx::chain2()).lattice.cat});
  cats.push_back({"MacNeille(antichain2)", macneille_completion(fx::antichain2()).lattice.cat});
  cats.push_back({"MacNeille(empty)", macneille_completion(fx::empty_category(fx::two())).lattice.cat});
  for (const auto& [name, C] : cats) {
    std::string bad;
    try {
      auto r = is_complete(*C);
      if (!r.complete) bad = "not complete";
      else if (!r.formulas_agree) bad = "closed formula disagrees";
      else if (!r.consistent()) bad = "inconsistent report";
    } catch (const Error& e) {
      bad = e.what();
    }
    t.check(bad.empty(), 0, [&] { return name + ": " + bad; });
  }
  return t.done();
}

// 8
LawResult dense_factorizations(const LawConfig& cfg) {
  Tally t(8, "dense factorization");
  auto report = [](const DenseFactorization& d) {
    return std::string(d.factorizes ? "" : " no factorization") + (d.sup_dense ? "" : " F not sup-dense") +
           (d.inf_dense ? "" : " G not inf-dense");
  };
  auto c = dense_factorization(fx::ctx1());
  t.check(c.ok(), 0, [&] { return "CTX1:" + report(c); });
  for (int k = 0; k < 20 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 8, k);
    Rng rng(seed);
    auto d = dense_factorization(fuzzy_context(fx::ql3(), 1 + rng.below(3), 1 + rng.below(3), rng));
    t.check(d.ok(), seed, [&] { return describe(seed, k, report(d)); });
  }
  return t.done();
}

// 9
LawResult girard_duality(const LawConfig& cfg) {
  Tally t(9, "girard duality");
  const QuantaloidPtr qs[] = {fx::two(), fx::boolean4()};
  const GirardStructure gs[] = {first_girard(qs[0]), first_girard(qs[1])};
  for (int k = 0; k < 50 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 9, k);
    Rng rng(seed);
    const int q = k % 2;
    auto A = random_category(qs[q], 1 + rng.below(q ? 2 : 3), rng);
    auto B = random_category(qs[q], 1 + rng.below(q ? 2 : 3), rng);
    auto d = girard_duality_check(random_distributor(A, B, rng), gs[q]);
    t.check(d.ok(), seed, [&] {
      return describe(seed, k, std::string(d.star_identity ? "" : " φ* ≠ ¬∘(¬φ)↑") +
                                   (d.lower_identity ? "" : " φ_* ≠ (¬φ)↓∘¬") + (d.iso_ok ? "" : " K(φ) ≇ M(¬φ)"));
    });
  }
  return t.done();
}

// 10
LawResult functoriality(const LawConfig& cfg) {
  Tally t(10, "functoriality of concept lattices");
  for (int k = 0; k < 30 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 10, k);
    Rng rng(seed);
    auto ch = random_infomorphism_chain(k % 2 ? fx::ql3() : fx::two(), 2, rng);
    auto ji = compose_infomorphisms(ch.j, ch.i);
    std::string bad;
    for (auto kind : {LatticeKind::M, LatticeKind::K}) {
      const auto ck = kind == LatticeKind::M ? ConceptKind::Isbell : ConceptKind::Kan;
      const std::string tag = kind == LatticeKind::M ? "M: " : "K: ";
      auto L1 = concept_lattice(ch.i.source, ck, Algorithm::Generated);
      auto L2 = concept_lattice(ch.i.target, ck, Algorithm::Generated);
      auto L3 = concept_lattice(ch.j.target, ck, Algorithm::Generated);
      auto id = concept_functor_image(identity_infomorphism(ch.i.source), kind, L1, L1);
      for (int c = 0; c < L1.size(); ++c)
        if (id.left(c) != c || id.right(c) != c) bad = tag + "identity not preserved";
      auto a = concept_functor_image(ch.i, kind, L1, L2);
      auto b = concept_functor_image(ch.j, kind, L2, L3);
      auto c = concept_functor_image(ji, kind, L1, L3);
      if (!a.adjoint || !b.adjoint || !c.adjoint || !id.adjoint) bad = tag + "image pair not adjoint";
      const bool comp = kind == LatticeKind::M
                            ? compose_functors(b.left, a.left).map == c.left.map &&
                                  compose_functors(a.right, b.right).map == c.right.map
                            : compose_functors(a.left, b.left).map == c.left.map &&
                                  compose_functors(b.right, a.right).map == c.right.map;
      if (!comp) bad = tag + "composite not preserved";
    }
    t.check(bad.empty(), seed, [&] { return describe(seed, k, bad); });
  }
  return t.done();
}

// 11
LawResult macneille(const LawConfig& cfg) {
  Tally t(11, "macneille completion");
  const int c2 = macneille_completion(fx::chain2()).lattice.size();
  const int a2 = macneille_completion(fx::antichain2()).lattice.size();
  const int e = macneille_completion(fx::empty_category(fx::two())).lattice.size();
  t.check(c2 == 2 && a2 == 4 && e == 1, 0, [&] {
    return "cut counts " + std::to_string(c2) + "/" + std::to_string(a2) + "/" + std::to_string(e);
  });
  for (int k = 0; k < 20 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 11, k);
    Rng rng(seed);
    auto A = random_category(k % 2 ? fx::ql3() : fx::two(), 1 + rng.below(3), rng);
    auto M = macneille_completion(A);
    auto MM = macneille_completion(M.lattice.cat);
    t.check(find_isomorphism(*MM.lattice.cat, *M.lattice.cat).has_value(), seed,
            [&] { return describe(seed, k, "M(M(A)) ≇ M(A)"); });
  }
  t.check(find_isomorphism(*macneille_completion(fx::chain2()).lattice.cat, *fx::chain2()).has_value(), 0,
          [] { return std::string("M(chain2) ≇ chain2"); });
  for (int k = 0; k < 5 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 111, k);
    Rng rng(seed);
    auto P = presheaf_category(random_category(k % 2 ? fx::ql3() : fx::two(), 1 + rng.below(2), rng),
                               Variance::Contra);
    t.check(find_isomorphism(*macneille_completion(P->cat).lattice.cat, *P->cat).has_value(), seed,
            [&] { return describe(seed, k, "M(PA) ≇ PA"); });
  }
  return t.done();
}

// 12
LawResult closure_reconstruction(const LawConfig& cfg) {
  Tally t(12, "closure reconstruction");
  for (int k = 0; k < 20 * scale(cfg); ++k) {
    const auto seed = instance_seed(cfg.seed, 12, k);
    Rng rng(seed);
    auto Q = k % 2 ? fx::ql3() : fx::two();
    auto A = random_category(Q, 1 + rng.below(3), rng);
    auto B = random_category(Q, 1 + rng.below(3), rng);
    auto P = presheaf_category(A, Variance::Contra);
    auto C = isbell_closure(random_distributor(A, B, rng), P);
    auto z = closure_to_context(C);
    std::string bad;
    if (!closure_operator_check(C).empty()) bad = "not a closure operator";
    for (int i = 0; i < P->size() && bad.empty(); ++i)
      if (isbell_transform(z, IsbellDir::Down, isbell_transform(z, IsbellDir::Up, P->items[i])) != P->items[C(i)])
        bad = "operator differs at " + weight_text(*A, Variance::Contra, P->items[i]);
    if (bad.empty()) {
      auto sp = state_property_system_check(z);
      if (!sp.ok()) bad = "state property system: " + sp.witness;
    }
    t.check(bad.empty(), seed, [&] { return describe(seed, k, bad); });
  }
  return t.done();
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t base, int criterion, int k) {
  std::uint64_t z = base * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(criterion) * 0xBF58476D1CE4E5B9ULL +
                    static_cast<std::uint64_t>(k);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const std::vector<LawEntry>& law_registry() {
  static const std::vector<LawEntry> registry = {
      {1, "residuation", residuation},
      {2, "divisible-quantale quantaloid", divisible_quantaloids},
      {3, "yoneda", yoneda_lemma},
      {4, "isbell and kan adjunctions", adjunction_homs},
      {5, "functor images as kan adjoints", functor_images},
      {6, "generated and brute concept lattices agree", concept_oracles},
      {7, "completeness of concept lattices", completeness},
      {8, "dense factorization", dense_factorizations},
      {9, "girard duality", girard_duality},
      {10, "functoriality of concept lattices", functoriality},
      {11, "macneille completion", macneille},
      {12, "closure reconstruction", closure_reconstruction},
  };
  return registry;
}

LawResult run_law(int criterion, const LawConfig& cfg) {
  for (const auto& e : law_registry())
    if (e.criterion == criterion) {
      try {
        return e.run(cfg);
      } catch (const Error& err) {
        LawResult r;
        r.criterion = criterion;
        r.law = e.law;
        r.failures = 1;
        r.witness = err.what();
        return r;
      }
    }
  throw Error(Errc::InvalidSize, "no law for criterion " + std::to_string(criterion));
}

std::string format_law_result(const LawResult& r, std::uint64_t base_seed) {
  std::ostringstream os;
  os << "criterion " << r.criterion << " " << r.law << ": " << (r.pass() ? "pass" : "FAIL") << " ("
     << r.instances << " instances";
  if (!r.pass()) os << ", " << r.failures << " failing";
  os << ")";
  if (!r.pass()) {
    os << "\n  witness: " << r.witness;
    os << "\n  replay: laws --seed " << base_seed << " --only " << r.criterion;
    if (r.seed) os << " (instance seed " << r.seed << ")";
  }
  return os.str();
}

}  // namespace qcat
