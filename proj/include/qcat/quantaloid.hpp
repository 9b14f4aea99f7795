#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcat/lattice.hpp"

namespace qcat {

/// Finite quantaloid stored as hom lattices plus composition tables.
/// Residuals are derived from composition by join-scan at construction.
class Quantaloid {
 public:
  /// compose(X, Y, Z, g, f) returns g∘f for f ∈ hom(X,Y), g ∈ hom(Y,Z).
  using ComposeFn = std::function<int(int, int, int, int, int)>;

  Quantaloid(std::vector<std::string> objects, std::vector<FiniteLattice> homs,
             std::vector<int> units, const ComposeFn& compose);
  /// tables[(X*n+Y)*n+Z] holds g∘f at g*|hom(X,Y)|+f. Throws StructureError on bad shape.
  Quantaloid(std::vector<std::string> objects, std::vector<FiniteLattice> homs,
             std::vector<int> units, std::vector<std::vector<int>> tables);

  int num_objects() const { return n_; }
  const std::string& object_name(int X) const { return objects_[X]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  std::optional<int> find_object(std::string_view name) const;

  const FiniteLattice& hom(int X, int Y) const { return homs_[X * n_ + Y]; }
  int unit(int X) const { return units_[X]; }

  int compose(int X, int Y, int Z, int g, int f) const {
    return comp_[(X * n_ + Y) * n_ + Z][g * homs_[X * n_ + Y].size() + f];
  }
  /// h↙f : Y→Z for h: X→Z, f: X→Y.
  int lres(int X, int Y, int Z, int h, int f) const {
    return lres_[(X * n_ + Y) * n_ + Z][h * homs_[X * n_ + Y].size() + f];
  }
  /// g↘h : X→Y for g: Y→Z, h: X→Z.
  int rres(int X, int Y, int Z, int g, int h) const {
    return rres_[(X * n_ + Y) * n_ + Z][g * homs_[X * n_ + Z].size() + h];
  }

  bool leq(int X, int Y, int a, int b) const { return hom(X, Y).leq(a, b); }
  int join(int X, int Y, int a, int b) const { return hom(X, Y).join(a, b); }
  int meet(int X, int Y, int a, int b) const { return hom(X, Y).meet(a, b); }
  int top(int X, int Y) const { return hom(X, Y).top(); }
  int bot(int X, int Y) const { return hom(X, Y).bot(); }

  const std::vector<int>& table(int X, int Y, int Z) const { return comp_[(X * n_ + Y) * n_ + Z]; }
  const std::vector<std::vector<int>>& tables() const { return comp_; }

  /// Copy with one composition entry overwritten (residuals rederived).
  Quantaloid with_compose_entry(int X, int Y, int Z, int g, int f, int value) const;

 private:
  void check_shape() const;
  void derive_residuals();

  int n_ = 0;
  std::vector<std::string> objects_;
  std::vector<FiniteLattice> homs_;
  std::vector<int> units_;
  std::vector<std::vector<int>> comp_;
  std::vector<std::vector<int>> lres_;
  std::vector<std::vector<int>> rres_;
};

using QuantaloidPtr = std::shared_ptr<const Quantaloid>;

/// An arrow together with its domain and codomain objects.
struct Arrow {
  int dom = 0;
  int cod = 0;
  int idx = 0;
  bool operator==(const Arrow&) const = default;
};

enum class Side { Left, Right };

struct LawViolation {
  std::string law;
  std::string witness;
};
using LawReport = std::vector<LawViolation>;

/// g∘f; throws ObjectMismatch unless cod f = dom g.
Arrow compose(const Quantaloid& Q, Arrow g, Arrow f);
/// Left: residual(h, f) = h↙f with dom h = dom f. Right: residual(g, h) = g↘h with cod g = cod h.
Arrow residual(const Quantaloid& Q, Side side, Arrow a, Arrow b);
/// 1 ≤ g∘f and f∘g ≤ 1; throws ObjectMismatch unless f: X→Y, g: Y→X.
bool arrow_adjoint_check(const Quantaloid& Q, Arrow f, Arrow g);

/// Exhaustive law check; empty report means Q is a quantaloid.
LawReport validate_quantaloid(const Quantaloid& Q);

Quantaloid build_boolean();

/// Negation data of a validated cyclic dualizing family.
class GirardStructure {
 public:
  GirardStructure(QuantaloidPtr Q, std::vector<int> family);
  const Quantaloid& quantaloid() const { return *Q_; }
  const QuantaloidPtr& quantaloid_ptr() const { return Q_; }
  const std::vector<int>& family() const { return d_; }
  /// ¬f = d_X↙f : Y→X for f: X→Y.
  int neg(int X, int Y, int f) const { return Q_->lres(X, Y, X, d_[X], f); }

 private:
  QuantaloidPtr Q_;
  std::vector<int> d_;
};

struct GirardReport {
  bool cyclic = false;
  bool dualizing = false;
  bool ok() const { return cyclic && dualizing; }
  std::optional<Arrow> witness;  // first failing arrow
  std::string detail;
};

GirardReport check_girard(const Quantaloid& Q, const std::vector<int>& family);
/// Throws NotCyclic / NotDualizing with the witness arrow.
GirardStructure girard_structure(QuantaloidPtr Q, const std::vector<int>& family);
/// Every cyclic dualizing family, in lexicographic order.
std::vector<std::vector<int>> find_girard_families(const Quantaloid& Q);

}  // namespace qcat
