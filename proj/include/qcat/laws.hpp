#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qcat {

enum class Profile { Small, Medium };

struct LawConfig {
  std::uint64_t seed = 1;
  Profile profile = Profile::Small;
  bool mutate = false;  // corrupt one composition entry of 2 before criterion 1
};

struct LawResult {
  int criterion = 0;
  std::string law;
  int instances = 0;
  int failures = 0;
  std::uint64_t seed = 0;  // instance seed of the first failure
  std::string witness;
  bool pass() const { return failures == 0; }
};

struct LawEntry {
  int criterion;
  std::string law;
  std::function<LawResult(const LawConfig&)> run;
};

/// Criteria 1 to 12 in order.
const std::vector<LawEntry>& law_registry();
LawResult run_law(int criterion, const LawConfig& cfg);

/// Seed of the k-th instance of a criterion under a base seed.
std::uint64_t instance_seed(std::uint64_t base, int criterion, int k);

/// One deterministic line per result.
std::string format_law_result(const LawResult& r, std::uint64_t base_seed);

}  // namespace qcat
