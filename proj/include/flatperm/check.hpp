#pragma once

#include <string>

namespace flatperm {

/// One verified claim and its outcome.
struct Check {
  std::string claim;
  bool passed = false;
  std::string detail;
};

}  // namespace flatperm
