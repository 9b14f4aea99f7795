#include "qcat/distributor.hpp"

#include "qcat/error.hpp"

namespace qcat {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw Error(Errc::CategoryMismatch, what);
}

}  // namespace

Matrix mat_compose(const Quantaloid& Q, const Matrix& psi, const Matrix& phi) {
  require(phi.col_types == psi.row_types, "compose: middle types differ");
  Matrix out{phi.row_types, psi.col_types, std::vector<int>(phi.rows() * psi.cols())};
  for (int x = 0; x < phi.rows(); ++x)
    for (int z = 0; z < psi.cols(); ++z) {
      const int X = phi.row_types[x], Z = psi.col_types[z];
      const FiniteLattice& L = Q.hom(X, Z);
      int acc = L.bot();
      for (int y = 0; y < phi.cols(); ++y)
        acc = L.join(acc, Q.compose(X, phi.col_types[y], Z, psi.at(y, z), phi.at(x, y)));
      out.at(x, z) = acc;
    }
  return out;
}

Matrix mat_lres(const Quantaloid& Q, const Matrix& eta, const Matrix& phi) {
  require(eta.row_types == phi.row_types, "left residual: domains differ");
  Matrix out{phi.col_types, eta.col_types, std::vector<int>(phi.cols() * eta.cols())};
  for (int y = 0; y < phi.cols(); ++y)
    for (int z = 0; z < eta.cols(); ++z) {
      const int Y = phi.col_types[y], Z = eta.col_types[z];
      const FiniteLattice& L = Q.hom(Y, Z);
      int acc = L.top();
      for (int x = 0; x < phi.rows(); ++x)
        acc = L.meet(acc, Q.lres(phi.row_types[x], Y, Z, eta.at(x, z), phi.at(x, y)));
      out.at(y, z) = acc;
    }
  return out;
}

Matrix mat_rres(const Quantaloid& Q, const Matrix& psi, const Matrix& eta) {
  require(psi.col_types == eta.col_types, "right residual: codomains differ");
  Matrix out{eta.row_types, psi.row_types, std::vector<int>(eta.rows() * psi.rows())};
  for (int x = 0; x < eta.rows(); ++x)
    for (int y = 0; y < psi.rows(); ++y) {
      const int X = eta.row_types[x], Y = psi.row_types[y];
      const FiniteLattice& L = Q.hom(X, Y);
      int acc = L.top();
      for (int z = 0; z < psi.cols(); ++z)
        acc = L.meet(acc, Q.rres(X, Y, psi.col_types[z], psi.at(y, z), eta.at(x, z)));
      out.at(x, y) = acc;
    }
  return out;
}

bool mat_leq(const Quantaloid& Q, const Matrix& a, const Matrix& b) {
  require(a.row_types == b.row_types && a.col_types == b.col_types, "order: shapes differ");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!Q.leq(a.row_types[i], a.col_types[j], a.at(i, j), b.at(i, j))) return false;
  return true;
}

Matrix mat_join(const Quantaloid& Q, const Matrix& a, const Matrix& b) {
  require(a.row_types == b.row_types && a.col_types == b.col_types, "join: shapes differ");
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.at(i, j) = Q.join(a.row_types[i], a.col_types[j], a.at(i, j), b.at(i, j));
  return out;
}

Matrix mat_meet(const Quantaloid& Q, const Matrix& a, const Matrix& b) {
  require(a.row_types == b.row_types && a.col_types == b.col_types, "meet: shapes differ");
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.at(i, j) = Q.meet(a.row_types[i], a.col_types[j], a.at(i, j), b.at(i, j));
  return out;
}

Matrix mat_bottom(const Quantaloid& Q, std::vector<int> rows, std::vector<int> cols) {
  Matrix m{std::move(rows), std::move(cols), {}};
  m.v.resize(m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Q.bot(m.row_types[i], m.col_types[j]);
  return m;
}

Matrix mat_top(const Quantaloid& Q, std::vector<int> rows, std::vector<int> cols) {
  Matrix m{std::move(rows), std::move(cols), {}};
  m.v.resize(m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Q.top(m.row_types[i], m.col_types[j]);
  return m;
}

Matrix hom_matrix(const QCategory& A) { return Matrix{A.types(), A.types(), A.homs()}; }

QDistributor make_distributor(CategoryPtr dom, CategoryPtr cod, std::vector<int> entries) {
  require(dom->quantaloid_ptr() == cod->quantaloid_ptr(), "distributor: different quantaloids");
  if (static_cast<int>(entries.size()) != dom->size() * cod->size())
    throw Error(Errc::StructureError, "distributor matrix has wrong size");
  const Quantaloid& Q = dom->Q();
  for (int x = 0; x < dom->size(); ++x)
    for (int y = 0; y < cod->size(); ++y) {
      const int a = entries[x * cod->size() + y];
      if (a < 0 || a >= Q.hom(dom->type(x), cod->type(y)).size())
        throw Error(Errc::TypeError, "entry (" + dom->name(x) + "," + cod->name(y) +
                                         ") outside its hom-set");
    }
  Matrix m{dom->types(), cod->types(), std::move(entries)};
  return {std::move(dom), std::move(cod), std::move(m)};
}

QDistributor identity_distributor(const CategoryPtr& A) { return {A, A, hom_matrix(*A)}; }

LawReport validate_distributor(const QDistributor& phi) {
  LawReport out;
  const QCategory& A = *phi.dom;
  const QCategory& B = *phi.cod;
  const Quantaloid& Q = A.Q();
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < B.size(); ++y) {
      const int X = A.type(x), Y = B.type(y);
      for (int y2 = 0; y2 < B.size(); ++y2)
        if (!Q.leq(X, Y, Q.compose(X, B.type(y2), Y, B.hom(y2, y), phi(x, y2)), phi(x, y)))
          out.push_back({"left-action", A.name(x) + "," + B.name(y2) + "," + B.name(y)});
      for (int x2 = 0; x2 < A.size(); ++x2)
        if (!Q.leq(X, Y, Q.compose(X, A.type(x2), Y, phi(x2, y), A.hom(x, x2)), phi(x, y)))
          out.push_back({"right-action", A.name(x) + "," + A.name(x2) + "," + B.name(y)});
    }
  return out;
}

QDistributor compose_distributors(const QDistributor& psi, const QDistributor& phi) {
  require(phi.cod.get() == psi.dom.get(), "compose: cod(phi) differs from dom(psi)");
  return {phi.dom, psi.cod, mat_compose(phi.dom->Q(), psi.m, phi.m)};
}

QDistributor dist_residual(Side side, const QDistributor& a, const QDistributor& b) {
  const Quantaloid& Q = a.dom->Q();
  if (side == Side::Left) {
    require(a.dom.get() == b.dom.get(), "left residual: domains differ");
    return {b.cod, a.cod, mat_lres(Q, a.m, b.m)};
  }
  require(a.cod.get() == b.cod.get(), "right residual: codomains differ");
  return {b.dom, a.dom, mat_rres(Q, a.m, b.m)};
}

bool dist_leq(const QDistributor& a, const QDistributor& b) {
  require(a.dom.get() == b.dom.get() && a.cod.get() == b.cod.get(), "order: categories differ");
  return mat_leq(a.dom->Q(), a.m, b.m);
}

bool dist_adjoint_check(const QDistributor& phi, const QDistributor& psi) {
  require(phi.dom.get() == psi.cod.get() && phi.cod.get() == psi.dom.get(),
          "adjoint check needs phi: A->B and psi: B->A");
  const Quantaloid& Q = phi.dom->Q();
  return mat_leq(Q, hom_matrix(*phi.dom), mat_compose(Q, psi.m, phi.m)) &&
         mat_leq(Q, mat_compose(Q, phi.m, psi.m), hom_matrix(*phi.cod));
}

GraphCograph graph_cograph(const QFunctor& F) {
  const QCategory& A = *F.dom;
  const QCategory& B = *F.cod;
  Matrix g{A.types(), B.types(), std::vector<int>(A.size() * B.size())};
  Matrix c{B.types(), A.types(), std::vector<int>(A.size() * B.size())};
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < B.size(); ++y) {
      g.at(x, y) = B.hom(F(x), y);
      c.at(y, x) = B.hom(y, F(x));
    }
  return {{F.dom, F.cod, std::move(g)}, {F.cod, F.dom, std::move(c)}};
}

}  // namespace qcat
