#include "qcat/quantale.hpp"

#include <numeric>

#include "qcat/error.hpp"

namespace qcat {

namespace {

std::string fraction_label(int k, int d) {
  if (k == 0) return "0";
  if (k == d) return "1";
  const int g = std::gcd(k, d);
  return std::to_string(k / g) + "/" + std::to_string(d / g);
}

QuantaleSpec chain_spec(int n, int (*op)(int, int, int)) {
  if (n < 2) throw Error(Errc::InvalidSize, "chain needs at least 2 elements");
  QuantaleSpec q;
  const int d = n - 1;
  for (int k = 0; k < n; ++k) q.elements.push_back(fraction_label(k, d));
  q.leq.assign(n, std::vector<bool>(n));
  q.tensor.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      q.leq[a][b] = a <= b;
      q.tensor[a][b] = op(a, b, d);
    }
  q.unit = d;
  return q;
}

}  // namespace

Quantale::Quantale(QuantaleSpec spec)
    : spec_(std::move(spec)), lat_(spec_.elements, spec_.leq) {
  const int n = lat_.size();
  if (static_cast<int>(spec_.tensor.size()) != n)
    throw Error(Errc::StructureError, "tensor table has wrong row count");
  for (const auto& row : spec_.tensor) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::StructureError, "tensor table has wrong column count");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(Errc::StructureError, "tensor entry out of range");
  }
  if (spec_.unit < 0 || spec_.unit >= n) throw Error(Errc::StructureError, "unit out of range");
  ldiv_.assign(n * n, 0);
  rdiv_.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int l = lat_.bot(), r = lat_.bot();
      for (int x = 0; x < n; ++x) {
        if (lat_.leq(spec_.tensor[x][b], a)) l = lat_.join(l, x);
        if (lat_.leq(spec_.tensor[a][x], b)) r = lat_.join(r, x);
      }
      ldiv_[a * n + b] = l;
      rdiv_[a * n + b] = r;
    }
}

std::vector<std::string> validate_quantale(const QuantaleSpec& spec) {
  std::vector<std::string> out;
  std::optional<Quantale> q;
  try {
    q.emplace(spec);
  } catch (const Error& e) {
    out.push_back(e.what());
    return out;
  }
  const FiniteLattice& L = q->lattice();
  const int n = L.size();
  auto lab = [&](int a) { return L.label(a); };
  for (int a = 0; a < n; ++a) {
    if (q->tensor(spec.unit, a) != a || q->tensor(a, spec.unit) != a)
      out.push_back("unit law fails at " + lab(a));
    if (q->tensor(a, L.bot()) != L.bot() || q->tensor(L.bot(), a) != L.bot())
      out.push_back("bottom not absorbing at " + lab(a));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (q->tensor(q->tensor(a, b), c) != q->tensor(a, q->tensor(b, c)))
          out.push_back("associativity fails at " + lab(a) + "," + lab(b) + "," + lab(c));
        if (q->tensor(a, L.join(b, c)) != L.join(q->tensor(a, b), q->tensor(a, c)))
          out.push_back("join-preservation (right) fails at " + lab(a) + "," + lab(b) + "," +
                        lab(c));
        if (q->tensor(L.join(b, c), a) != L.join(q->tensor(b, a), q->tensor(c, a)))
          out.push_back("join-preservation (left) fails at " + lab(a) + "," + lab(b) + "," +
                        lab(c));
      }
  }
  return out;
}

QuantaleSpec build_lukasiewicz_chain(int n) {
  return chain_spec(n, [](int a, int b, int d) { return std::max(0, a + b - d); });
}

QuantaleSpec build_godel_chain(int n) {
  return chain_spec(n, [](int a, int b, int) { return std::min(a, b); });
}

QuantaleSpec build_nilpotent_minimum_chain(int n) {
  return chain_spec(n, [](int a, int b, int d) { return a + b <= d ? 0 : std::min(a, b); });
}

QuantaleSpec build_boolean_algebra(int atoms) {
  if (atoms < 0 || atoms > 4) throw Error(Errc::InvalidSize, "boolean algebra atoms must be 0..4");
  const int n = 1 << atoms;
  QuantaleSpec q;
  for (int s = 0; s < n; ++s) {
    if (s == 0) {
      q.elements.push_back("0");
    } else if (s == n - 1) {
      q.elements.push_back("1");
    } else {
      std::string l;
      for (int i = 0; i < atoms; ++i)
        if (s & (1 << i)) l += static_cast<char>('a' + i);
      q.elements.push_back(l);
    }
  }
  q.leq.assign(n, std::vector<bool>(n));
  q.tensor.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      q.leq[a][b] = (a & b) == a;
      q.tensor[a][b] = a & b;
    }
  q.unit = n - 1;
  return q;
}

DivisibilityResult check_divisible(const QuantaleSpec& spec) {
  Quantale q(spec);
  const FiniteLattice& L = q.lattice();
  const int n = L.size();
  DivisibilityResult res;
  // Reported witness: largest a first, then smallest b.
  for (int a = n - 1; a >= 0; --a)
    for (int b = 0; b < n; ++b) {
      const int m = L.meet(a, b);
      if (q.tensor(q.ldiv(b, a), a) != m || q.tensor(a, q.rdiv(a, b)) != m) {
        res.divisible = false;
        res.violations.emplace_back(a, b);
        if (!res.witness) res.witness = std::make_pair(a, b);
      }
    }
  return res;
}

Quantaloid quantaloid_from_divisible_quantale(const QuantaleSpec& spec) {
  DivisibilityResult div = check_divisible(spec);
  if (!div.divisible) {
    const auto [a, b] = *div.witness;
    throw Error(Errc::NotDivisible,
                "condition fails at (" + spec.elements[a] + "," + spec.elements[b] + ")");
  }
  Quantale q(spec);
  const FiniteLattice& L = q.lattice();
  const int n = L.size();
  // Arrow index i of hom(X,Y) is the i-th element below X∧Y in canonical order.
  std::vector<std::vector<int>> elems(n * n);
  std::vector<std::vector<int>> index(n * n, std::vector<int>(n, -1));
  std::vector<FiniteLattice> homs;
  homs.reserve(n * n);
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y) {
      const int m = L.meet(X, Y);
      auto& es = elems[X * n + Y];
      for (int e = 0; e < n; ++e)
        if (L.leq(e, m)) {
          index[X * n + Y][e] = static_cast<int>(es.size());
          es.push_back(e);
        }
      std::vector<std::string> labels;
      std::vector<std::vector<bool>> leq(es.size(), std::vector<bool>(es.size()));
      for (std::size_t i = 0; i < es.size(); ++i) {
        labels.push_back(spec.elements[es[i]]);
        for (std::size_t j = 0; j < es.size(); ++j) leq[i][j] = L.leq(es[i], es[j]);
      }
      homs.emplace_back(std::move(labels), leq);
    }
  std::vector<int> units(n);
  for (int X = 0; X < n; ++X) units[X] = index[X * n + X][X];
  auto comp = [&](int X, int Y, int Z, int g, int f) {
    const int alpha = elems[X * n + Y][f];
    const int beta = elems[Y * n + Z][g];
    const int v = q.tensor(beta, q.rdiv(Y, alpha));
    const int idx = index[X * n + Z][v];
    if (idx < 0) throw Error(Errc::StructureError, "composite escapes its hom-set");
    return idx;
  };
  std::vector<std::string> objects = spec.elements;
  return Quantaloid(std::move(objects), std::move(homs), std::move(units), comp);
}

}  // namespace qcat
