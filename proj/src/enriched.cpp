#include "qcat/enriched.hpp"

#include <algorithm>
#include <functional>

#include "qcat/error.hpp"

namespace qcat {

QCategory::QCategory(QuantaloidPtr Q, std::vector<std::string> names, std::vector<int> types,
                     std::vector<int> hom)
    : Q_(std::move(Q)), names_(std::move(names)), types_(std::move(types)), hom_(std::move(hom)) {
  const int n = size();
  if (static_cast<int>(names_.size()) != n)
    throw Error(Errc::StructureError, "category names and types differ in length");
  if (static_cast<int>(hom_.size()) != n * n)
    throw Error(Errc::StructureError, "category hom matrix has wrong size");
  for (int x = 0; x < n; ++x)
    if (types_[x] < 0 || types_[x] >= Q_->num_objects())
      throw Error(Errc::TypeError, "object " + names_[x] + " has a type outside the quantaloid");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int a = hom_[x * n + y];
      if (a < 0 || a >= Q_->hom(types_[x], types_[y]).size())
        throw Error(Errc::TypeError, "hom(" + names_[x] + "," + names_[y] + ") not in Q(" +
                                         Q_->object_name(types_[x]) + "," +
                                         Q_->object_name(types_[y]) + ")");
    }
}

std::optional<int> QCategory::find(const std::string& name) const {
  for (int x = 0; x < size(); ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

QCategory discrete_category(QuantaloidPtr Q, const QTypedSet& S) {
  const int n = static_cast<int>(S.types.size());
  std::vector<int> hom(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int X = S.types[x], Y = S.types[y];
      if (X < 0 || X >= Q->num_objects() || Y < 0 || Y >= Q->num_objects())
        throw Error(Errc::TypeError, "type outside the quantaloid");
      hom[x * n + y] = x == y ? Q->unit(X) : Q->bot(X, Y);
    }
  return QCategory(std::move(Q), S.names, S.types, std::move(hom));
}

LawReport validate_category(const QCategory& A) {
  LawReport out;
  const Quantaloid& Q = A.Q();
  const int n = A.size();
  for (int x = 0; x < n; ++x)
    if (!Q.leq(A.type(x), A.type(x), Q.unit(A.type(x)), A.hom(x, x)))
      out.push_back({"unit", A.name(x)});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int X = A.type(x), Y = A.type(y), Z = A.type(z);
        if (!Q.leq(X, Z, Q.compose(X, Y, Z, A.hom(y, z), A.hom(x, y)), A.hom(x, z)))
          out.push_back({"transitivity", A.name(x) + "," + A.name(y) + "," + A.name(z)});
      }
  return out;
}

Preorder underlying_preorder(const QCategory& A) {
  Preorder P;
  P.n = A.size();
  P.rel.assign(P.n * P.n, 0);
  const Quantaloid& Q = A.Q();
  for (int x = 0; x < P.n; ++x)
    for (int y = 0; y < P.n; ++y) {
      const int X = A.type(x);
      P.rel[x * P.n + y] = X == A.type(y) && Q.leq(X, X, Q.unit(X), A.hom(x, y));
    }
  for (int x = 0; x < P.n && P.skeletal; ++x)
    for (int y = x + 1; y < P.n; ++y)
      if (P.iso(x, y)) {
        P.skeletal = false;
        break;
      }
  return P;
}

namespace {

void same_ambient(const QCategory& A, const QCategory& B) {
  if (A.quantaloid_ptr() != B.quantaloid_ptr())
    throw Error(Errc::CategoryMismatch, "categories live over different quantaloids");
}

}  // namespace

FunctorReport validate_functor(const QFunctor& F) {
  FunctorReport rep;
  const QCategory& A = *F.dom;
  const QCategory& B = *F.cod;
  same_ambient(A, B);
  if (static_cast<int>(F.map.size()) != A.size()) {
    rep.violations.push_back({"arity", "object map has wrong length"});
    return rep;
  }
  for (int x = 0; x < A.size(); ++x) {
    if (F.map[x] < 0 || F.map[x] >= B.size()) {
      rep.violations.push_back({"range", A.name(x)});
      return rep;
    }
    if (B.type(F.map[x]) != A.type(x)) rep.violations.push_back({"type", A.name(x)});
  }
  if (!rep.violations.empty()) return rep;
  const Quantaloid& Q = A.Q();
  rep.fully_faithful = true;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y) {
      const int a = A.hom(x, y), b = B.hom(F.map[x], F.map[y]);
      if (!Q.leq(A.type(x), A.type(y), a, b))
        rep.violations.push_back({"hom", A.name(x) + "," + A.name(y)});
      if (a != b) rep.fully_faithful = false;
    }
  if (!rep.violations.empty()) rep.fully_faithful = false;
  return rep;
}

QFunctor identity_functor(const CategoryPtr& A) {
  QFunctor F{A, A, std::vector<int>(A->size())};
  for (int x = 0; x < A->size(); ++x) F.map[x] = x;
  return F;
}

QFunctor compose_functors(const QFunctor& G, const QFunctor& F) {
  if (F.cod.get() != G.dom.get())
    throw Error(Errc::CategoryMismatch, "functor composition: codomain differs from domain");
  QFunctor H{F.dom, G.cod, std::vector<int>(F.map.size())};
  for (std::size_t x = 0; x < F.map.size(); ++x) H.map[x] = G.map[F.map[x]];
  return H;
}

bool functor_adjoint_check(const QFunctor& F, const QFunctor& G) {
  const QCategory& A = *F.dom;
  const QCategory& B = *F.cod;
  same_ambient(A, B);
  if (G.dom.get() != F.cod.get() || G.cod.get() != F.dom.get())
    throw Error(Errc::CategoryMismatch, "adjoint check needs F: A->B and G: B->A");
  for (int x = 0; x < A.size(); ++x)
    if (B.type(F.map[x]) != A.type(x)) return false;
  for (int y = 0; y < B.size(); ++y)
    if (A.type(G.map[y]) != B.type(y)) return false;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < B.size(); ++y)
      if (B.hom(F.map[x], y) != A.hom(x, G.map[y])) return false;
  return true;
}

bool functor_leq(const QFunctor& F, const QFunctor& G) {
  Preorder P = underlying_preorder(*F.cod);
  for (std::size_t x = 0; x < F.map.size(); ++x)
    if (!P.le(F.map[x], G.map[x])) return false;
  return true;
}

bool functor_iso(const QFunctor& F, const QFunctor& G) {
  Preorder P = underlying_preorder(*F.cod);
  for (std::size_t x = 0; x < F.map.size(); ++x)
    if (!P.iso(F.map[x], G.map[x])) return false;
  return true;
}

std::vector<QFunctor> enumerate_functors(const CategoryPtr& A, const CategoryPtr& B,
                                         std::size_t limit) {
  same_ambient(*A, *B);
  std::vector<QFunctor> out;
  const Quantaloid& Q = A->Q();
  const int n = A->size();
  std::vector<int> map(n, -1);
  std::function<void(int)> rec = [&](int x) {
    if (out.size() >= limit) return;
    if (x == n) {
      out.push_back({A, B, map});
      return;
    }
    for (int b = 0; b < B->size(); ++b) {
      if (B->type(b) != A->type(x)) continue;
      map[x] = b;
      bool ok = true;
      for (int y = 0; y <= x && ok; ++y) {
        ok = Q.leq(A->type(x), A->type(y), A->hom(x, y), B->hom(b, map[y])) &&
             Q.leq(A->type(y), A->type(x), A->hom(y, x), B->hom(map[y], b));
      }
      if (ok) rec(x + 1);
    }
    map[x] = -1;
  };
  rec(0);
  return out;
}

std::vector<QFunctor> find_right_adjoints(const QFunctor& F) {
  const QCategory& A = *F.dom;
  const QCategory& B = *F.cod;
  std::vector<QFunctor> out;
  const int n = B.size();
  std::vector<int> map(n, -1);
  std::function<void(int)> rec = [&](int y) {
    if (y == n) {
      out.push_back({F.cod, F.dom, map});
      return;
    }
    for (int a = 0; a < A.size(); ++a) {
      if (A.type(a) != B.type(y)) continue;
      bool ok = true;
      for (int x = 0; x < A.size() && ok; ++x) ok = B.hom(F.map[x], y) == A.hom(x, a);
      if (!ok) continue;
      map[y] = a;
      rec(y + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const QCategory& A, const QCategory& B) {
  if (A.size() != B.size()) return std::nullopt;
  if (A.quantaloid_ptr() != B.quantaloid_ptr()) return std::nullopt;
  const int n = A.size();
  // Signature per object: type, diagonal, and sorted row/column homs with types.
  auto signature = [](const QCategory& C, int x) {
    std::vector<long long> row, col;
    for (int y = 0; y < C.size(); ++y) {
      row.push_back(static_cast<long long>(C.type(y)) * 1000003 + C.hom(x, y));
      col.push_back(static_cast<long long>(C.type(y)) * 1000003 + C.hom(y, x));
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    std::vector<long long> s{C.type(x), C.hom(x, x)};
    s.insert(s.end(), row.begin(), row.end());
    s.push_back(-1);
    s.insert(s.end(), col.begin(), col.end());
    return s;
  };
  std::vector<std::vector<long long>> sa(n), sb(n);
  for (int x = 0; x < n; ++x) {
    sa[x] = signature(A, x);
    sb[x] = signature(B, x);
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z)
        ok = A.hom(x, z) == B.hom(y, map[z]) && A.hom(z, x) == B.hom(map[z], y);
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (rec(x + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

QCategory full_subcategory(const QCategory& A, const std::vector<int>& objects) {
  const int m = static_cast<int>(objects.size());
  std::vector<std::string> names;
  std::vector<int> types, hom(m * m);
  for (int i = 0; i < m; ++i) {
    names.push_back(A.name(objects[i]));
    types.push_back(A.type(objects[i]));
    for (int j = 0; j < m; ++j) hom[i * m + j] = A.hom(objects[i], objects[j]);
  }
  return QCategory(A.quantaloid_ptr(), std::move(names), std::move(types), std::move(hom));
}

}  // namespace qcat
