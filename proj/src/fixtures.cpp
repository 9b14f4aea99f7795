#include "qcat/fixtures.hpp"

#include "qcat/quantale.hpp"

namespace qcat::fixtures {

QuantaloidPtr two() {
  static const QuantaloidPtr q = std::make_shared<const Quantaloid>(build_boolean());
  return q;
}

QuantaloidPtr ql3() {
  static const QuantaloidPtr q =
      std::make_shared<const Quantaloid>(quantaloid_from_divisible_quantale(build_lukasiewicz_chain(3)));
  return q;
}

QuantaloidPtr ql5() {
  static const QuantaloidPtr q =
      std::make_shared<const Quantaloid>(quantaloid_from_divisible_quantale(build_lukasiewicz_chain(5)));
  return q;
}

QuantaloidPtr boolean4() {
  static const QuantaloidPtr q =
      std::make_shared<const Quantaloid>(quantaloid_from_divisible_quantale(build_boolean_algebra(2)));
  return q;
}

CategoryPtr discrete(const QuantaloidPtr& Q, std::vector<std::string> names,
                     std::vector<int> types) {
  return std::make_shared<const QCategory>(
      discrete_category(Q, QTypedSet{std::move(names), std::move(types)}));
}

CategoryPtr chain2() {
  return std::make_shared<const QCategory>(two(), std::vector<std::string>{"x", "y"},
                                           std::vector<int>{0, 0}, std::vector<int>{1, 1, 0, 1});
}

CategoryPtr antichain2() { return discrete(two(), {"x", "y"}, {0, 0}); }

CategoryPtr empty_category(const QuantaloidPtr& Q) { return discrete(Q, {}, {}); }

QDistributor crisp_context(const std::vector<std::vector<bool>>& R) {
  const int na = static_cast<int>(R.size());
  const int nb = na == 0 ? 0 : static_cast<int>(R[0].size());
  std::vector<std::string> objs, attrs;
  for (int x = 0; x < na; ++x) objs.push_back(std::to_string(x + 1));
  for (int y = 0; y < nb; ++y) attrs.push_back(std::string(1, static_cast<char>('a' + y)));
  std::vector<int> m;
  for (const auto& row : R)
    for (bool b : row) m.push_back(b ? 1 : 0);
  return make_distributor(discrete(two(), objs, std::vector<int>(na, 0)),
                          discrete(two(), attrs, std::vector<int>(nb, 0)), std::move(m));
}

QDistributor ctx1() { return crisp_context({{true, true}, {false, true}}); }

}  // namespace qcat::fixtures
