#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bellbound/rational.hpp"

namespace bellbound {

/// Column of a 0/1 constraint matrix: the rows holding a 1. Local-polytope
/// vertex columns have this shape (one detected outcome per input block),
/// which keeps pricing to plain additions.
struct UnitColumn {
  std::vector<std::int32_t> rows;
};

struct Phase1Result {
  bool feasible = false;
  /// Feasible: nonnegative weights (column index, weight) with A w = b.
  std::vector<std::pair<std::size_t, Rational>> support;
  /// Infeasible: Farkas vector y with y.b > 0 and y.A_j <= 0 for every column.
  std::vector<Rational> farkas;
  Rational objective;  // phase-1 optimum, zero iff feasible
  long pivots = 0;
};

/// Exact-rational phase-1 simplex (minimize the sum of artificial variables)
/// for A w = b, w >= 0, with A column-wise 0/1 and b >= 0 entrywise.
///
/// Bland's rule is used for entering and leaving choices, so the method
/// terminates despite the heavy degeneracy of boundary queries; verdicts are
/// exact, which a floating-point solver cannot promise at the boundary.
/// Artificial variables are removed for good once they leave the basis.
Phase1Result phase1_feasibility(std::size_t num_rows, const std::vector<UnitColumn>& columns,
                                const std::vector<Rational>& rhs);

}  // namespace bellbound
