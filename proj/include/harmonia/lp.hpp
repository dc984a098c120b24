#pragma once

#include <vector>

namespace harmonia {

// Dense two-phase simplex for the desk-scale feasibility searches. Solves
//   max c.x  s.t.  A x <= b,  x >= 0
// Sizes here stay in the tens of rows/columns.
struct LpResult {
  bool feasible = false;
  bool bounded = true;
  double objective = 0.0;
  std::vector<double> x;
};

LpResult lp_solve(const std::vector<double>& c, const std::vector<std::vector<double>>& A,
                  const std::vector<double>& b);

} // namespace harmonia
