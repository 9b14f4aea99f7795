#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcat/completion.hpp"

namespace qcat {

enum class IsbellDir { Up, Down };
/// Up: μ ∈ PA ↦ φ↙μ ∈ P†B. Down: λ ∈ P†B ↦ λ↘φ ∈ PA.
Weight isbell_transform(const QDistributor& phi, IsbellDir dir, const Weight& w);

enum class KanKind { Star, Lower, Dag, LowerDag };
/// Star: λ ∈ PB ↦ λ∘φ. Lower: μ ∈ PA ↦ μ↙φ. Dag: μ ∈ P†A ↦ φ∘μ. LowerDag: λ ∈ P†B ↦ φ↘λ.
Weight kan_transform(const QDistributor& phi, KanKind kind, const Weight& w);

enum class ConceptKind { Isbell, Kan };
enum class Algorithm { Brute, Generated };

struct Concept {
  Weight mu;
  Weight lam;
  std::string generator;
  int type() const { return mu.type; }
};

struct ConceptLattice {
  ConceptKind kind = ConceptKind::Isbell;
  QDistributor phi;
  std::vector<Concept> concepts;  // ordered by (type, μ)
  CategoryPtr cat;                // hom = PA(μ₁, μ₂)
  std::unordered_map<Weight, int, WeightHash> by_mu;
  std::unordered_map<Weight, int, WeightHash> by_lam;
  int size() const { return static_cast<int>(concepts.size()); }
  int find_mu(const Weight& mu) const;
  int find_lam(const Weight& lam) const;
};

/// Brute scans PA for fixed points; generated closes the columns of φ.
ConceptLattice concept_lattice(const QDistributor& phi, ConceptKind kind, Algorithm algorithm,
                               std::uint64_t cap = kDefaultCap);
/// PA(μ₁,μ₂) equals the hom of the λ components for every pair.
bool concept_order_check(const ConceptLattice& L);

/// φ↓∘φ↑ on PA.
ClosureOperator isbell_closure(const QDistributor& phi, const PresheafSpacePtr& PA);
/// φ*∘φ_* on PA.
ClosureOperator kan_interior(const QDistributor& phi, const PresheafSpacePtr& PA);

struct MacNeille {
  ConceptLattice lattice;
  QFunctor embedding;  // x ↦ (Y x, Y† x)
};
MacNeille macneille_completion(const CategoryPtr& A, std::uint64_t cap = kDefaultCap);

/// ¬φ: B ⇸ A with (¬φ)(y,x) = ¬φ(x,y). Throws NotGirard on a foreign quantaloid.
QDistributor negate_distributor(const QDistributor& phi, const GirardStructure& g);
/// Pointwise ¬ turning presheaves into copresheaves and back.
Weight negate_weight(const QCategory& A, Variance v, const Weight& w, const GirardStructure& g);

struct GirardDuality {
  bool star_identity = false;   // φ* = ¬∘(¬φ)↑
  bool lower_identity = false;  // φ_* = (¬φ)↓∘¬
  ConceptLattice K;
  ConceptLattice M;
  std::vector<int> iso;  // K index ↦ M index under (μ,λ) ↦ (λ,¬μ)
  bool iso_ok = false;
  bool ok() const { return star_identity && lower_identity && iso_ok; }
};
GirardDuality girard_duality_check(const QDistributor& phi, const GirardStructure& g,
                                   std::uint64_t cap = kDefaultCap);

enum class LatticeKind { M, K };

struct ConceptFunctors {
  QFunctor left;   // M: M(φ)→M(ψ); K: K(ψ)→K(φ)
  QFunctor right;  // the reverse direction
  bool adjoint = false;
};

/// Images of an infomorphism i: φ→ψ. `source` and `target` are the lattices of φ and ψ.
ConceptFunctors concept_functor_image(const Infomorphism& i, LatticeKind kind,
                                      const ConceptLattice& source, const ConceptLattice& target);

enum class DensityDir { Sup, Inf };

struct DensityReport {
  bool dense = false;
  std::optional<int> witness;  // an object of the codomain not reached
};
DensityReport density_check(const QFunctor& F, DensityDir dir, std::uint64_t cap = kDefaultCap);

struct DenseFactorization {
  ConceptLattice lattice;
  QFunctor F;  // A → lattice
  QFunctor G;  // B → lattice
  bool factorizes = false;  // φ(x,y) = X(Fx,Gy)
  bool sup_dense = false;   // of F for M, of G for K
  bool inf_dense = false;   // of G for M, of F for K
  bool ok() const { return factorizes && sup_dense && inf_dense; }
};
/// φ = G^♮∘F_♮ through M(φ).
DenseFactorization dense_factorization(const QDistributor& phi, std::uint64_t cap = kDefaultCap);
/// The Kan analogue through K(φ); throws Unsupported without a Girard structure.
DenseFactorization kan_dense_factorization(const QDistributor& phi, const GirardStructure* g,
                                           std::uint64_t cap = kDefaultCap);

struct StatePropertyReport {
  bool inf_axiom = false;  // φ(−, inf λ) = λ↘φ
  bool hom_axiom = false;  // B(y,y') = φ(−,y')↙φ(−,y)
  std::string witness;
  bool ok() const { return inf_axiom && hom_axiom; }
};
StatePropertyReport state_property_system_check(const QDistributor& phi,
                                                std::uint64_t cap = kDefaultCap);

}  // namespace qcat
