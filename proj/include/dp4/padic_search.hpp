#pragma once

// Breadth-first search for primitive zeros of systems of one or two
// quadratic forms modulo growing powers of p, with two-sided rigor:
//   - Empty is returned only when no primitive solution exists at some level
//     (hence no Z_p point exists at all);
//   - PointFound is returned only with a witness satisfying the quantitative
//     Hensel condition (a Jacobian minor of valuation w at a solution modulo
//     p^j with j > 2w), which guarantees a genuine Z_p point.

#include <vector>

#include "dp4/quadform.hpp"

namespace dp4 {

enum class LiftStatus { Empty, PointFound, Unknown };

struct LiftResult {
  LiftStatus status = LiftStatus::Unknown;
  int level = 0;                  // level reached (empty level / witness level)
  std::vector<Integer> witness;   // primitive solution mod p^level (PointFound)
  int minor_valuation = -1;       // valuation of the certifying Jacobian minor
};

// forms: one or two quadratic forms in the same number of variables (<= 6).
// Levels are capped at max_level; p^max_level must stay below 2^31.
LiftResult lift_search(const std::vector<QuadraticForm>& forms, const Integer& p,
                       int max_level, size_t max_frontier = (size_t{1} << 22));

}  // namespace dp4
