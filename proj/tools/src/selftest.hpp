#pragma once

#include <string>
#include <vector>

#include "avecond/settings.hpp"

namespace avecond::cli {

struct SelfCheck {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string relation;  // "abs_diff" or "at_most"
};

// Regression checks on the worked examples: singular values of the 2x2
// example and its shifts, the sigma_min bound slack family and the LCP bridge
// instance.
std::vector<SelfCheck> run_selftest(const Settings& s);

}  // namespace avecond::cli
