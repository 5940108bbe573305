#pragma once

// Exact feasibility for {x : E x = f, x_j >= 0 for flagged j}.

#include <vector>

#include "cornerpoly/exact.hpp"

namespace cornerpoly {

struct LpResult {
  bool feasible = false;
  RatVector witness;  // satisfies every constraint exactly when feasible
};

/// `nonneg[j]` marks variable j as sign-constrained; the rest are free.
LpResult lp_feasible(const RatMatrix& eq, const RatVector& rhs, const std::vector<bool>& nonneg);

/// Convenience overload for integer data with all variables nonnegative.
LpResult lp_feasible(const IntMatrix& eq, const IntVector& rhs);

}  // namespace cornerpoly
