#include "qcat/adjunction.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qcat/error.hpp"

namespace qcat {

namespace {

void require_size(const QCategory& C, const Weight& w, const char* what) {
  if (static_cast<int>(w.w.size()) != C.size()) throw Error(Errc::CategoryMismatch, what);
}

}  // namespace

Weight isbell_transform(const QDistributor& phi, IsbellDir dir, const Weight& w) {
  const Quantaloid& Q = phi.dom->Q();
  if (dir == IsbellDir::Up) {
    require_size(*phi.dom, w, "isbell up: presheaf is not on the domain");
    return copresheaf_of(mat_lres(Q, phi.m, presheaf_matrix(*phi.dom, w)));
  }
  require_size(*phi.cod, w, "isbell down: copresheaf is not on the codomain");
  return presheaf_of(mat_rres(Q, copresheaf_matrix(*phi.cod, w), phi.m));
}

Weight kan_transform(const QDistributor& phi, KanKind kind, const Weight& w) {
  const Quantaloid& Q = phi.dom->Q();
  switch (kind) {
    case KanKind::Star:
      require_size(*phi.cod, w, "kan star: presheaf is not on the codomain");
      return presheaf_of(mat_compose(Q, presheaf_matrix(*phi.cod, w), phi.m));
    case KanKind::Lower:
      require_size(*phi.dom, w, "kan lower: presheaf is not on the domain");
      return presheaf_of(mat_lres(Q, presheaf_matrix(*phi.dom, w), phi.m));
    case KanKind::Dag:
      require_size(*phi.dom, w, "kan dag: copresheaf is not on the domain");
      return copresheaf_of(mat_compose(Q, phi.m, copresheaf_matrix(*phi.dom, w)));
    case KanKind::LowerDag:
      require_size(*phi.cod, w, "kan lower dag: copresheaf is not on the codomain");
      return copresheaf_of(mat_rres(Q, phi.m, copresheaf_matrix(*phi.cod, w)));
  }
  throw Error(Errc::Unsupported, "unknown Kan transform");
}

int ConceptLattice::find_mu(const Weight& mu) const {
  auto it = by_mu.find(mu);
  return it == by_mu.end() ? -1 : it->second;
}

int ConceptLattice::find_lam(const Weight& lam) const {
  auto it = by_lam.find(lam);
  return it == by_lam.end() ? -1 : it->second;
}

namespace {

Weight column(const QDistributor& phi, int y) {
  Weight w{phi.cod->type(y), std::vector<int>(phi.dom->size())};
  for (int x = 0; x < phi.dom->size(); ++x) w.w[x] = phi(x, y);
  return w;
}

Weight pointwise(const QCategory& A, const Weight& a, const Weight& b, bool join) {
  const Quantaloid& Q = A.Q();
  Weight out = a;
  for (int x = 0; x < A.size(); ++x)
    out.w[x] = join ? Q.join(A.type(x), a.type, a.w[x], b.w[x])
                    : Q.meet(A.type(x), a.type, a.w[x], b.w[x]);
  return out;
}

// Closes the columns of φ under same-type meets and cotensors (Isbell) or under
// tensors and same-type joins (Kan), together with the empty meet or join per type.
std::vector<std::pair<Weight, std::string>> generate(const QDistributor& phi, ConceptKind kind) {
  const QCategory& A = *phi.dom;
  const Quantaloid& Q = A.Q();
  const bool isbell = kind == ConceptKind::Isbell;
  std::vector<std::pair<Weight, std::string>> found;
  std::unordered_map<Weight, int, WeightHash> seen;
  std::deque<int> queue;
  auto add = [&](Weight w, std::string how) {
    if (seen.count(w)) return;
    seen.emplace(w, static_cast<int>(found.size()));
    queue.push_back(static_cast<int>(found.size()));
    found.emplace_back(std::move(w), std::move(how));
  };
  for (int y = 0; y < phi.cod->size(); ++y) add(column(phi, y), "column " + phi.cod->name(y));
  for (int X = 0; X < Q.num_objects(); ++X)
    add(isbell ? top_weight(A, Variance::Contra, X) : bottom_weight(A, Variance::Contra, X),
        (isbell ? "top " : "bottom ") + Q.object_name(X));

  std::vector<int> processed;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    const Weight mu = found[i].first;
    for (int j : processed)
      if (found[j].first.type == mu.type)
        add(pointwise(A, mu, found[j].first, !isbell), isbell ? "meet" : "join");
    processed.push_back(i);
    const int Y = mu.type;
    for (int X = 0; X < Q.num_objects(); ++X) {
      const int k = isbell ? Q.hom(X, Y).size() : Q.hom(Y, X).size();
      for (int g = 0; g < k; ++g) {
        Weight out{X, std::vector<int>(A.size())};
        for (int a = 0; a < A.size(); ++a)
          out.w[a] = isbell ? Q.rres(A.type(a), X, Y, g, mu.w[a])
                            : Q.compose(A.type(a), Y, X, g, mu.w[a]);
        add(std::move(out), isbell ? "cotensor" : "tensor");
      }
    }
  }
  return found;
}

Weight partner(const QDistributor& phi, ConceptKind kind, const Weight& mu) {
  return kind == ConceptKind::Isbell ? isbell_transform(phi, IsbellDir::Up, mu)
                                     : kan_transform(phi, KanKind::Lower, mu);
}

Weight round_trip(const QDistributor& phi, ConceptKind kind, const Weight& mu) {
  return kind == ConceptKind::Isbell
             ? isbell_transform(phi, IsbellDir::Down, isbell_transform(phi, IsbellDir::Up, mu))
             : kan_transform(phi, KanKind::Star, kan_transform(phi, KanKind::Lower, mu));
}

}  // namespace

ConceptLattice concept_lattice(const QDistributor& phi, ConceptKind kind, Algorithm algorithm,
                               std::uint64_t cap) {
  ConceptLattice L;
  L.kind = kind;
  L.phi = phi;
  if (algorithm == Algorithm::Brute) {
    for (auto& mu : enumerate_weights(*phi.dom, Variance::Contra, cap))
      if (round_trip(phi, kind, mu) == mu) {
        Weight lam = partner(phi, kind, mu);
        L.concepts.push_back({std::move(mu), std::move(lam), "scan"});
      }
  } else {
    for (auto& [mu, how] : generate(phi, kind)) {
      Weight lam = partner(phi, kind, mu);
      L.concepts.push_back({std::move(mu), std::move(lam), std::move(how)});
    }
    std::sort(L.concepts.begin(), L.concepts.end(),
              [](const Concept& a, const Concept& b) { return a.mu < b.mu; });
  }
  std::vector<Weight> mus;
  for (int k = 0; k < L.size(); ++k) {
    mus.push_back(L.concepts[k].mu);
    L.by_mu.emplace(L.concepts[k].mu, k);
    L.by_lam.emplace(L.concepts[k].lam, k);
  }
  L.cat = weight_category(*phi.dom, Variance::Contra, mus, "k");
  return L;
}

bool concept_order_check(const ConceptLattice& L) {
  const QCategory& B = *L.phi.cod;
  const Variance v = L.kind == ConceptKind::Isbell ? Variance::Co : Variance::Contra;
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j)
      if (L.cat->hom(i, j) != weight_hom(B, v, L.concepts[i].lam, L.concepts[j].lam)) return false;
  return true;
}

ClosureOperator isbell_closure(const QDistributor& phi, const PresheafSpacePtr& PA) {
  ClosureOperator C{PA, std::vector<int>(PA->size())};
  for (int i = 0; i < PA->size(); ++i)
    C.map[i] = PA->at(round_trip(phi, ConceptKind::Isbell, PA->items[i]));
  return C;
}

ClosureOperator kan_interior(const QDistributor& phi, const PresheafSpacePtr& PA) {
  ClosureOperator C{PA, std::vector<int>(PA->size())};
  for (int i = 0; i < PA->size(); ++i)
    C.map[i] = PA->at(round_trip(phi, ConceptKind::Kan, PA->items[i]));
  return C;
}

MacNeille macneille_completion(const CategoryPtr& A, std::uint64_t cap) {
  MacNeille out{concept_lattice(identity_distributor(A), ConceptKind::Isbell, Algorithm::Generated,
                                cap),
                {}};
  out.embedding = QFunctor{A, out.lattice.cat, std::vector<int>(A->size())};
  for (int x = 0; x < A->size(); ++x)
    out.embedding.map[x] = out.lattice.find_mu(yoneda_weight(*A, Variance::Contra, x));
  return out;
}

QDistributor negate_distributor(const QDistributor& phi, const GirardStructure& g) {
  if (g.quantaloid_ptr() != phi.dom->quantaloid_ptr())
    throw Error(Errc::NotGirard, "Girard structure belongs to another quantaloid");
  const QCategory& A = *phi.dom;
  const QCategory& B = *phi.cod;
  std::vector<int> m(A.size() * B.size());
  for (int y = 0; y < B.size(); ++y)
    for (int x = 0; x < A.size(); ++x) m[y * A.size() + x] = g.neg(A.type(x), B.type(y), phi(x, y));
  return make_distributor(phi.cod, phi.dom, std::move(m));
}

Weight negate_weight(const QCategory& A, Variance v, const Weight& w, const GirardStructure& g) {
  if (g.quantaloid_ptr() != A.quantaloid_ptr())
    throw Error(Errc::NotGirard, "Girard structure belongs to another quantaloid");
  Weight out = w;
  for (int a = 0; a < A.size(); ++a)
    out.w[a] = v == Variance::Contra ? g.neg(A.type(a), w.type, w.w[a]) : g.neg(w.type, A.type(a), w.w[a]);
  return out;
}

GirardDuality girard_duality_check(const QDistributor& phi, const GirardStructure& g,
                                   std::uint64_t cap) {
  GirardDuality r;
  const QDistributor neg = negate_distributor(phi, g);
  const QCategory& A = *phi.dom;
  r.star_identity = true;
  for (const auto& lam : enumerate_weights(*phi.cod, Variance::Contra, cap))
    if (kan_transform(phi, KanKind::Star, lam) !=
        negate_weight(A, Variance::Co, isbell_transform(neg, IsbellDir::Up, lam), g))
      r.star_identity = false;
  r.lower_identity = true;
  for (const auto& mu : enumerate_weights(A, Variance::Contra, cap))
    if (kan_transform(phi, KanKind::Lower, mu) !=
        isbell_transform(neg, IsbellDir::Down, negate_weight(A, Variance::Contra, mu, g)))
      r.lower_identity = false;

  r.K = concept_lattice(phi, ConceptKind::Kan, Algorithm::Generated, cap);
  r.M = concept_lattice(neg, ConceptKind::Isbell, Algorithm::Generated, cap);
  r.iso_ok = r.K.size() == r.M.size();
  std::set<int> hit;
  for (const auto& c : r.K.concepts) {
    const int m = r.M.find_mu(c.lam);
    r.iso.push_back(m);
    if (m < 0 || r.M.concepts[m].lam != negate_weight(A, Variance::Contra, c.mu, g)) r.iso_ok = false;
    hit.insert(m);
  }
  r.iso_ok = r.iso_ok && static_cast<int>(hit.size()) == r.K.size();
  for (int i = 0; r.iso_ok && i < r.K.size(); ++i)
    for (int j = 0; j < r.K.size(); ++j)
      if (r.K.cat->hom(i, j) != r.M.cat->hom(r.iso[i], r.iso[j])) r.iso_ok = false;
  return r;
}

namespace {

int lookup(int k, const char* what) {
  if (k < 0) throw Error(Errc::StructureError, what);
  return k;
}

}  // namespace

ConceptFunctors concept_functor_image(const Infomorphism& i, LatticeKind kind,
                                      const ConceptLattice& source, const ConceptLattice& target) {
  if (source.phi.dom.get() != i.source.dom.get() || source.phi.cod.get() != i.source.cod.get() ||
      target.phi.dom.get() != i.target.dom.get() || target.phi.cod.get() != i.target.cod.get())
    throw Error(Errc::InvalidInfomorphism, "lattices do not belong to the infomorphism");
  auto violations = validate_infomorphism(i);
  if (!violations.empty())
    throw Error(Errc::InvalidInfomorphism, "infomorphism fails at " + violations[0].witness);

  ConceptFunctors out;
  if (kind == LatticeKind::M) {
    out.left = QFunctor{source.cat, target.cat, std::vector<int>(source.size())};
    out.right = QFunctor{target.cat, source.cat, std::vector<int>(target.size())};
    for (int k = 0; k < source.size(); ++k) {
      const Weight pushed = image_weight(i.F, ImageKind::Ra, source.concepts[k].mu);
      out.left.map[k] = lookup(target.find_mu(round_trip(i.target, ConceptKind::Isbell, pushed)),
                               "closed image missing from the target lattice");
    }
    for (int k = 0; k < target.size(); ++k)
      out.right.map[k] = lookup(source.find_mu(image_weight(i.F, ImageKind::La, target.concepts[k].mu)),
                                "inverse image is not closed");
  } else {
    out.left = QFunctor{target.cat, source.cat, std::vector<int>(target.size())};
    out.right = QFunctor{source.cat, target.cat, std::vector<int>(source.size())};
    for (int k = 0; k < target.size(); ++k) {
      const Weight pushed = image_weight(i.G, ImageKind::Ra, target.concepts[k].lam);
      const Weight closed = kan_transform(
          i.source, KanKind::Lower, kan_transform(i.source, KanKind::Star, pushed));
      out.left.map[k] = lookup(source.find_lam(closed), "closed image missing from the source lattice");
    }
    for (int k = 0; k < source.size(); ++k)
      out.right.map[k] = lookup(target.find_lam(image_weight(i.G, ImageKind::La, source.concepts[k].lam)),
                                "inverse image is not closed");
  }
  out.adjoint = functor_adjoint_check(out.left, out.right);
  return out;
}

DensityReport density_check(const QFunctor& F, DensityDir dir, std::uint64_t cap) {
  const bool sup_side = dir == DensityDir::Sup;
  std::vector<char> reached(F.cod->size(), 0);
  for (const auto& w : enumerate_weights(*F.dom, sup_side ? Variance::Contra : Variance::Co, cap)) {
    auto c = sup_side ? colimit(F, w) : limit(F, w);
    if (c) reached[*c] = 1;
  }
  DensityReport r{true, std::nullopt};
  for (int y = 0; y < F.cod->size(); ++y)
    if (!reached[y]) {
      r.dense = false;
      r.witness = y;
      break;
    }
  return r;
}

DenseFactorization dense_factorization(const QDistributor& phi, std::uint64_t cap) {
  DenseFactorization r;
  r.lattice = concept_lattice(phi, ConceptKind::Isbell, Algorithm::Generated, cap);
  const QCategory& A = *phi.dom;
  const QCategory& B = *phi.cod;
  r.F = QFunctor{phi.dom, r.lattice.cat, std::vector<int>(A.size())};
  r.G = QFunctor{phi.cod, r.lattice.cat, std::vector<int>(B.size())};
  for (int a = 0; a < A.size(); ++a)
    r.F.map[a] = lookup(
        r.lattice.find_mu(round_trip(phi, ConceptKind::Isbell, yoneda_weight(A, Variance::Contra, a))),
        "closure of a representable missing");
  for (int b = 0; b < B.size(); ++b)
    r.G.map[b] = lookup(r.lattice.find_mu(column(phi, b)), "column missing");
  r.factorizes = true;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < B.size(); ++y)
      if (r.lattice.cat->hom(r.F(x), r.G(y)) != phi(x, y)) r.factorizes = false;
  r.sup_dense = density_check(r.F, DensityDir::Sup, cap).dense;
  r.inf_dense = density_check(r.G, DensityDir::Inf, cap).dense;
  return r;
}

DenseFactorization kan_dense_factorization(const QDistributor& phi, const GirardStructure* g,
                                           std::uint64_t cap) {
  if (g == nullptr)
    throw Error(Errc::Unsupported, "inf-dense factorization through K needs a Girard structure");
  DenseFactorization r;
  const QDistributor neg = negate_distributor(phi, *g);
  r.lattice = concept_lattice(phi, ConceptKind::Kan, Algorithm::Generated, cap);
  const QCategory& A = *phi.dom;
  const QCategory& B = *phi.cod;
  r.F = QFunctor{phi.dom, r.lattice.cat, std::vector<int>(A.size())};
  r.G = QFunctor{phi.cod, r.lattice.cat, std::vector<int>(B.size())};
  for (int a = 0; a < A.size(); ++a)
    r.F.map[a] = lookup(r.lattice.find_lam(column(neg, a)), "negated row missing");
  for (int b = 0; b < B.size(); ++b)
    r.G.map[b] = lookup(r.lattice.find_mu(column(phi, b)), "column missing");
  // ¬φ(y,x) = K(Gy, Fx).
  r.factorizes = true;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < B.size(); ++y)
      if (r.lattice.cat->hom(r.G(y), r.F(x)) != neg(y, x)) r.factorizes = false;
  r.sup_dense = density_check(r.G, DensityDir::Sup, cap).dense;
  r.inf_dense = density_check(r.F, DensityDir::Inf, cap).dense;
  return r;
}

StatePropertyReport state_property_system_check(const QDistributor& phi, std::uint64_t cap) {
  StatePropertyReport r{true, true, {}};
  const QCategory& A = *phi.dom;
  const QCategory& B = *phi.cod;
  for (const auto& lam : enumerate_weights(B, Variance::Co, cap)) {
    auto b = inf(B, lam);
    if (!b || column(phi, *b) != isbell_transform(phi, IsbellDir::Down, lam)) {
      r.inf_axiom = false;
      if (r.witness.empty()) r.witness = b ? "inf of a copresheaf of type " + B.Q().object_name(lam.type)
                                           : "copresheaf without infimum";
      break;
    }
  }
  for (int y = 0; y < B.size() && r.hom_axiom; ++y)
    for (int y2 = 0; y2 < B.size(); ++y2)
      if (B.hom(y, y2) != presheaf_hom(A, column(phi, y), column(phi, y2))) {
        r.hom_axiom = false;
        if (r.witness.empty()) r.witness = "hom " + B.name(y) + "," + B.name(y2);
        break;
      }
  return r;
}

}  // namespace qcat
