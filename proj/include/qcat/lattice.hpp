#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcat {

/// Finite complete lattice over canonical indices 0..n-1, given by its order.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  /// Throws StructureError if `leq` is not a partial order in which every subset has a join.
  FiniteLattice(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

  static FiniteLattice chain(std::vector<std::string> labels);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int bot() const { return bot_; }
  int top() const { return top_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<int> join_;
  std::vector<int> meet_;
  int bot_ = -1;
  int top_ = -1;
};

}  // namespace qcat
