#pragma once

#include <string>

#include "torica/numeric.hpp"

namespace torica {

/// Verdict of one bound check on one instance.
struct BoundReport {
  std::string instance;
  std::string bound;
  Rational lhs;
  Rational rhs;
  bool passed = false;
  bool applicable = true;  // false: hypotheses not met, verdict vacuous
  bool equality = false;
  std::string note;
};

}  // namespace torica
