#include "qcat/lattice.hpp"

#include "qcat/error.hpp"

namespace qcat {

namespace {

// Least element of `cands` under `le`, or -1.
template <class Le>
int least_of(const std::vector<int>& cands, Le le) {
  for (int c : cands) {
    bool least = true;
    for (int d : cands) {
      if (!le(c, d)) {
        least = false;
        break;
      }
    }
    if (least) return c;
  }
  return -1;
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> labels,
                             const std::vector<std::vector<bool>>& leq)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (n_ == 0) throw Error(Errc::StructureError, "empty carrier has no bottom element");
  if (static_cast<int>(leq.size()) != n_)
    throw Error(Errc::StructureError, "leq matrix has wrong row count");
  leq_.assign(n_ * n_, 0);
  for (int a = 0; a < n_; ++a) {
    if (static_cast<int>(leq[a].size()) != n_)
      throw Error(Errc::StructureError, "leq matrix has wrong column count");
    for (int b = 0; b < n_; ++b) leq_[a * n_ + b] = leq[a][b] ? 1 : 0;
  }
  for (int a = 0; a < n_; ++a) {
    if (!this->leq(a, a))
      throw Error(Errc::StructureError, "leq not reflexive at " + labels_[a]);
    for (int b = 0; b < n_; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a))
        throw Error(Errc::StructureError,
                    "leq not antisymmetric at " + labels_[a] + "," + labels_[b]);
      for (int c = 0; c < n_; ++c)
        if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c))
          throw Error(Errc::StructureError, "leq not transitive at " + labels_[a] + "," +
                                                labels_[b] + "," + labels_[c]);
    }
  }
  auto le = [this](int a, int b) { return this->leq(a, b); };
  auto ge = [this](int a, int b) { return this->leq(b, a); };
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  bot_ = least_of(all, le);
  top_ = least_of(all, ge);
  if (bot_ < 0) throw Error(Errc::StructureError, "no bottom element");
  if (top_ < 0) throw Error(Errc::StructureError, "no top element");
  join_.assign(n_ * n_, -1);
  meet_.assign(n_ * n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      std::vector<int> ub, lb;
      for (int c = 0; c < n_; ++c) {
        if (this->leq(a, c) && this->leq(b, c)) ub.push_back(c);
        if (this->leq(c, a) && this->leq(c, b)) lb.push_back(c);
      }
      int j = least_of(ub, le);
      int m = least_of(lb, ge);
      if (j < 0) throw Error(Errc::StructureError, "no join of " + labels_[a] + "," + labels_[b]);
      if (m < 0) throw Error(Errc::StructureError, "no meet of " + labels_[a] + "," + labels_[b]);
      join_[a * n_ + b] = j;
      meet_[a * n_ + b] = m;
    }
  }
}

FiniteLattice FiniteLattice::chain(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = a <= b;
  return FiniteLattice(std::move(labels), leq);
}

std::optional<int> FiniteLattice::find(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

}  // namespace qcat
