#pragma once

#include "simplexhull/geomcore.hpp"

namespace simplexhull::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Vectord x;              ///< primal solution (valid when optimal)
  double objective = 0;   ///< c^T x at the optimum
  double infeasibility = 0;  ///< phase-one residual sum
};

/// Dense two-phase simplex method with Bland's rule:
///   minimize c^T x  subject to  A x = b,  x >= 0.
/// The problem is declared infeasible when the phase-one residual exceeds
/// `feasibility_tol`. Intended for the small systems (tens of variables)
/// arising from simplex-pair intersection tests.
Solution minimize(const Matrixd& a, const Vectord& b, const Vectord& c,
                  double feasibility_tol = 1e-9);

}  // namespace simplexhull::lp
