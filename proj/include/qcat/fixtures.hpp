#pragma once

#include <string>
#include <vector>

#include "qcat/distributor.hpp"

namespace qcat::fixtures {

QuantaloidPtr two();
/// Quantaloids of the Łukasiewicz 3- and 5-chains.
QuantaloidPtr ql3();
QuantaloidPtr ql5();
/// Quantaloid of the four-element Boolean algebra.
QuantaloidPtr boolean4();

CategoryPtr discrete(const QuantaloidPtr& Q, std::vector<std::string> names,
                     std::vector<int> types);
/// x < y over 2.
CategoryPtr chain2();
/// Two incomparable objects over 2.
CategoryPtr antichain2();
CategoryPtr empty_category(const QuantaloidPtr& Q);

/// Crisp context over 2 with objects 1..na, attributes a,b,c..., R[x][y].
QDistributor crisp_context(const std::vector<std::vector<bool>>& R);
/// Objects {1,2}, attributes {a,b}, R = {(1,a),(1,b),(2,b)}.
QDistributor ctx1();

}  // namespace qcat::fixtures
