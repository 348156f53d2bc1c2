#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsk/hall.hpp"

namespace qsk {

struct Criterion {
  int id = 0;
  std::string title;
  std::function<bool(std::string& detail, unsigned seed)> run;
};

// The full exact verification battery, in a fixed order.
const std::vector<Criterion>& criteria();

// Named subsets for the command line: suite name -> criterion ids.
const std::map<std::string, std::vector<int>>& suites();

// standard small quivers used by the battery
Quiver make_a1();
Quiver make_a2();
Quiver make_a3();
Quiver make_jordan();
// one-vertex quiver with `loops` loops, identity involution and signs (sigma,
// varsigma per loop)
Involution make_point_involution(const Quiver& q, int sigma, int varsigma);

}  // namespace qsk
