#pragma once

#include <string>
#include <vector>

namespace hk::selftest {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed;
};

// quick: series pins and small Grassmannian oracles. full adds the quintic,
// the Fano tower and the cross-method table agreement up to s = 24.
std::vector<Check> run(bool full);

}  // namespace hk::selftest
