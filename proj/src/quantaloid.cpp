#include "qcat/quantaloid.hpp"

#include <sstream>

#include "qcat/error.hpp"

namespace qcat {

Quantaloid::Quantaloid(std::vector<std::string> objects, std::vector<FiniteLattice> homs,
                       std::vector<int> units, const ComposeFn& compose)
    : n_(static_cast<int>(objects.size())),
      objects_(std::move(objects)),
      homs_(std::move(homs)),
      units_(std::move(units)) {
  if (static_cast<int>(homs_.size()) != n_ * n_)
    throw Error(Errc::StructureError, "homs: expected one lattice per object pair");
  comp_.resize(n_ * n_ * n_);
  for (int X = 0; X < n_; ++X)
    for (int Y = 0; Y < n_; ++Y)
      for (int Z = 0; Z < n_; ++Z) {
        const int a = hom(X, Y).size(), b = hom(Y, Z).size();
        auto& t = comp_[(X * n_ + Y) * n_ + Z];
        t.resize(a * b);
        for (int g = 0; g < b; ++g)
          for (int f = 0; f < a; ++f) t[g * a + f] = compose(X, Y, Z, g, f);
      }
  check_shape();
  derive_residuals();
}

Quantaloid::Quantaloid(std::vector<std::string> objects, std::vector<FiniteLattice> homs,
                       std::vector<int> units, std::vector<std::vector<int>> tables)
    : n_(static_cast<int>(objects.size())),
      objects_(std::move(objects)),
      homs_(std::move(homs)),
      units_(std::move(units)),
      comp_(std::move(tables)) {
  if (static_cast<int>(homs_.size()) != n_ * n_)
    throw Error(Errc::StructureError, "homs: expected one lattice per object pair");
  check_shape();
  derive_residuals();
}

void Quantaloid::check_shape() const {
  if (static_cast<int>(units_.size()) != n_)
    throw Error(Errc::StructureError, "units: expected one arrow per object");
  for (int X = 0; X < n_; ++X)
    if (units_[X] < 0 || units_[X] >= hom(X, X).size())
      throw Error(Errc::StructureError, "units: arrow out of range at " + objects_[X]);
  if (static_cast<int>(comp_.size()) != n_ * n_ * n_)
    throw Error(Errc::StructureError, "compose: expected one table per object triple");
  for (int X = 0; X < n_; ++X)
    for (int Y = 0; Y < n_; ++Y)
      for (int Z = 0; Z < n_; ++Z) {
        const auto& t = comp_[(X * n_ + Y) * n_ + Z];
        const std::string where = objects_[X] + "," + objects_[Y] + "," + objects_[Z];
        if (static_cast<int>(t.size()) != hom(X, Y).size() * hom(Y, Z).size())
          throw Error(Errc::StructureError, "compose table " + where + " has wrong size");
        for (int v : t)
          if (v < 0 || v >= hom(X, Z).size())
            throw Error(Errc::StructureError, "compose table " + where + " entry out of range");
      }
}

void Quantaloid::derive_residuals() {
  lres_.assign(n_ * n_ * n_, {});
  rres_.assign(n_ * n_ * n_, {});
  for (int X = 0; X < n_; ++X)
    for (int Y = 0; Y < n_; ++Y)
      for (int Z = 0; Z < n_; ++Z) {
        const FiniteLattice& XY = hom(X, Y);
        const FiniteLattice& YZ = hom(Y, Z);
        const FiniteLattice& XZ = hom(X, Z);
        auto& L = lres_[(X * n_ + Y) * n_ + Z];
        auto& R = rres_[(X * n_ + Y) * n_ + Z];
        L.assign(XZ.size() * XY.size(), 0);
        R.assign(YZ.size() * XZ.size(), 0);
        for (int h = 0; h < XZ.size(); ++h)
          for (int f = 0; f < XY.size(); ++f) {
            int acc = YZ.bot();
            for (int g = 0; g < YZ.size(); ++g)
              if (XZ.leq(compose(X, Y, Z, g, f), h)) acc = YZ.join(acc, g);
            L[h * XY.size() + f] = acc;
          }
        for (int g = 0; g < YZ.size(); ++g)
          for (int h = 0; h < XZ.size(); ++h) {
            int acc = XY.bot();
            for (int f = 0; f < XY.size(); ++f)
              if (XZ.leq(compose(X, Y, Z, g, f), h)) acc = XY.join(acc, f);
            R[g * XZ.size() + h] = acc;
          }
      }
}

std::optional<int> Quantaloid::find_object(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (objects_[i] == name) return i;
  return std::nullopt;
}

Quantaloid Quantaloid::with_compose_entry(int X, int Y, int Z, int g, int f, int value) const {
  auto tables = comp_;
  tables[(X * n_ + Y) * n_ + Z][g * hom(X, Y).size() + f] = value;
  return Quantaloid(objects_, homs_, units_, std::move(tables));
}

namespace {

std::string arrow_str(const Quantaloid& Q, int X, int Y, int a) {
  return Q.hom(X, Y).label(a) + ":" + Q.object_name(X) + "->" + Q.object_name(Y);
}

void check_range(const Quantaloid& Q, Arrow a) {
  if (a.dom < 0 || a.cod < 0 || a.dom >= Q.num_objects() || a.cod >= Q.num_objects() ||
      a.idx < 0 || a.idx >= Q.hom(a.dom, a.cod).size())
    throw Error(Errc::ObjectMismatch, "arrow outside the quantaloid");
}

}  // namespace

Arrow compose(const Quantaloid& Q, Arrow g, Arrow f) {
  check_range(Q, g);
  check_range(Q, f);
  if (f.cod != g.dom)
    throw Error(Errc::ObjectMismatch, "compose: codomain " + Q.object_name(f.cod) +
                                          " differs from domain " + Q.object_name(g.dom));
  return {f.dom, g.cod, Q.compose(f.dom, f.cod, g.cod, g.idx, f.idx)};
}

Arrow residual(const Quantaloid& Q, Side side, Arrow a, Arrow b) {
  check_range(Q, a);
  check_range(Q, b);
  if (side == Side::Left) {
    if (a.dom != b.dom) throw Error(Errc::ObjectMismatch, "left residual: domains differ");
    return {b.cod, a.cod, Q.lres(a.dom, b.cod, a.cod, a.idx, b.idx)};
  }
  if (a.cod != b.cod) throw Error(Errc::ObjectMismatch, "right residual: codomains differ");
  return {b.dom, a.dom, Q.rres(b.dom, a.dom, a.cod, a.idx, b.idx)};
}

bool arrow_adjoint_check(const Quantaloid& Q, Arrow f, Arrow g) {
  check_range(Q, f);
  check_range(Q, g);
  if (f.cod != g.dom || g.cod != f.dom)
    throw Error(Errc::ObjectMismatch, "adjoint check needs f: X->Y and g: Y->X");
  const int X = f.dom, Y = f.cod;
  const bool unit = Q.leq(X, X, Q.unit(X), Q.compose(X, Y, X, g.idx, f.idx));
  const bool counit = Q.leq(Y, Y, Q.compose(Y, X, Y, f.idx, g.idx), Q.unit(Y));
  return unit && counit;
}

LawReport validate_quantaloid(const Quantaloid& Q) {
  LawReport out;
  const int n = Q.num_objects();
  auto add = [&](const char* law, std::string w) { out.push_back({law, std::move(w)}); };
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int f = 0; f < Q.hom(X, Y).size(); ++f) {
        if (Q.compose(X, Y, Y, Q.unit(Y), f) != f)
          add("unit-left", "1_" + Q.object_name(Y) + " o " + arrow_str(Q, X, Y, f));
        if (Q.compose(X, X, Y, f, Q.unit(X)) != f)
          add("unit-right", arrow_str(Q, X, Y, f) + " o 1_" + Q.object_name(X));
      }
  for (int W = 0; W < n; ++W)
    for (int X = 0; X < n; ++X)
      for (int Y = 0; Y < n; ++Y)
        for (int Z = 0; Z < n; ++Z)
          for (int e = 0; e < Q.hom(W, X).size(); ++e)
            for (int f = 0; f < Q.hom(X, Y).size(); ++f)
              for (int g = 0; g < Q.hom(Y, Z).size(); ++g) {
                const int l = Q.compose(W, Y, Z, g, Q.compose(W, X, Y, f, e));
                const int r = Q.compose(W, X, Z, Q.compose(X, Y, Z, g, f), e);
                if (l != r)
                  add("associativity", arrow_str(Q, Y, Z, g) + " o " + arrow_str(Q, X, Y, f) +
                                           " o " + arrow_str(Q, W, X, e));
              }
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z) {
        const FiniteLattice& XY = Q.hom(X, Y);
        const FiniteLattice& YZ = Q.hom(Y, Z);
        const FiniteLattice& XZ = Q.hom(X, Z);
        for (int g = 0; g < YZ.size(); ++g) {
          if (Q.compose(X, Y, Z, g, XY.bot()) != XZ.bot())
            add("join-preservation-right", arrow_str(Q, Y, Z, g) + " o bottom");
          for (int f1 = 0; f1 < XY.size(); ++f1)
            for (int f2 = f1 + 1; f2 < XY.size(); ++f2)
              if (Q.compose(X, Y, Z, g, XY.join(f1, f2)) !=
                  XZ.join(Q.compose(X, Y, Z, g, f1), Q.compose(X, Y, Z, g, f2)))
                add("join-preservation-right", arrow_str(Q, Y, Z, g) + " o (" +
                                                   arrow_str(Q, X, Y, f1) + " v " +
                                                   arrow_str(Q, X, Y, f2) + ")");
        }
        for (int f = 0; f < XY.size(); ++f) {
          if (Q.compose(X, Y, Z, YZ.bot(), f) != XZ.bot())
            add("join-preservation-left", "bottom o " + arrow_str(Q, X, Y, f));
          for (int g1 = 0; g1 < YZ.size(); ++g1)
            for (int g2 = g1 + 1; g2 < YZ.size(); ++g2)
              if (Q.compose(X, Y, Z, YZ.join(g1, g2), f) !=
                  XZ.join(Q.compose(X, Y, Z, g1, f), Q.compose(X, Y, Z, g2, f)))
                add("join-preservation-left", "(" + arrow_str(Q, Y, Z, g1) + " v " +
                                                  arrow_str(Q, Y, Z, g2) + ") o " +
                                                  arrow_str(Q, X, Y, f));
        }
        for (int f = 0; f < XY.size(); ++f)
          for (int g = 0; g < YZ.size(); ++g)
            for (int h = 0; h < XZ.size(); ++h) {
              const bool a = XZ.leq(Q.compose(X, Y, Z, g, f), h);
              const bool b = YZ.leq(g, Q.lres(X, Y, Z, h, f));
              const bool c = XY.leq(f, Q.rres(X, Y, Z, g, h));
              if (a != b || a != c) {
                std::ostringstream w;
                w << "g=" << arrow_str(Q, Y, Z, g) << " f=" << arrow_str(Q, X, Y, f)
                  << " h=" << arrow_str(Q, X, Z, h) << " (g.f<=h:" << a << " g<=h/f:" << b
                  << " f<=g\\h:" << c << ")";
                add("residuation", w.str());
              }
            }
      }
  return out;
}

Quantaloid build_boolean() {
  FiniteLattice two = FiniteLattice::chain({"0", "1"});
  return Quantaloid({"*"}, {two}, {1}, std::vector<std::vector<int>>{{0, 0, 0, 1}});
}

GirardStructure::GirardStructure(QuantaloidPtr Q, std::vector<int> family)
    : Q_(std::move(Q)), d_(std::move(family)) {}

GirardReport check_girard(const Quantaloid& Q, const std::vector<int>& d) {
  GirardReport rep;
  const int n = Q.num_objects();
  if (static_cast<int>(d.size()) != n)
    throw Error(Errc::StructureError, "dualizing family needs one arrow per object");
  for (int X = 0; X < n; ++X)
    if (d[X] < 0 || d[X] >= Q.hom(X, X).size())
      throw Error(Errc::StructureError, "dualizing family arrow out of range");
  rep.cyclic = true;
  rep.dualizing = true;
  for (int X = 0; X < n && rep.cyclic; ++X)
    for (int Y = 0; Y < n && rep.cyclic; ++Y)
      for (int f = 0; f < Q.hom(X, Y).size(); ++f) {
        const int l = Q.lres(X, Y, X, d[X], f);
        const int r = Q.rres(Y, X, Y, f, d[Y]);
        if (l != r) {
          rep.cyclic = false;
          rep.witness = Arrow{X, Y, f};
          rep.detail = "d_X/f != f\\d_Y at " + arrow_str(Q, X, Y, f);
          break;
        }
      }
  for (int X = 0; X < n && rep.dualizing; ++X)
    for (int Y = 0; Y < n && rep.dualizing; ++Y)
      for (int f = 0; f < Q.hom(X, Y).size(); ++f) {
        const int a = Q.rres(X, Y, X, Q.lres(X, Y, X, d[X], f), d[X]);
        const int b = Q.lres(Y, X, Y, d[Y], Q.rres(Y, X, Y, f, d[Y]));
        if (a != f || b != f) {
          rep.dualizing = false;
          if (rep.cyclic) {
            rep.witness = Arrow{X, Y, f};
            rep.detail = "double negation differs from f at " + arrow_str(Q, X, Y, f);
          }
          break;
        }
      }
  return rep;
}

GirardStructure girard_structure(QuantaloidPtr Q, const std::vector<int>& family) {
  GirardReport rep = check_girard(*Q, family);
  if (!rep.cyclic) throw Error(Errc::NotCyclic, rep.detail);
  if (!rep.dualizing) throw Error(Errc::NotDualizing, rep.detail);
  return GirardStructure(std::move(Q), family);
}

std::vector<std::vector<int>> find_girard_families(const Quantaloid& Q) {
  std::vector<std::vector<int>> out;
  const int n = Q.num_objects();
  std::vector<int> d(n, 0);
  while (true) {
    if (check_girard(Q, d).ok()) out.push_back(d);
    int i = n - 1;
    while (i >= 0 && d[i] + 1 >= Q.hom(i, i).size()) d[i--] = 0;
    if (i < 0) break;
    ++d[i];
  }
  return out;
}

}  // namespace qcat
