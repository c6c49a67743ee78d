#include "bellbound/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace bellbound {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

Phase1Result phase1_feasibility(std::size_t num_rows, const std::vector<UnitColumn>& columns,
                                const std::vector<Rational>& rhs) {
  const std::size_t m = num_rows;
  const std::size_t n = columns.size();
  if (rhs.size() != m) throw std::invalid_argument("right-hand side size mismatch");
  for (const Rational& v : rhs) {
    if (v < 0) throw std::invalid_argument("phase-1 needs a nonnegative right-hand side");
  }
  for (const UnitColumn& col : columns) {
    for (std::int32_t r : col.rows) {
      if (r < 0 || static_cast<std::size_t>(r) >= m) {
        throw std::invalid_argument("column row index out of range");
      }
    }
  }

  // Variable ids: 0..n-1 structural, n + r the artificial of row r.
  std::vector<std::size_t> basis(m);
  std::vector<char> structural_basic(n, 0);
  std::vector<std::vector<Rational>> binv(m, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> x_basic = rhs;
  for (std::size_t r = 0; r < m; ++r) {
    binv[r][r] = 1;
    basis[r] = n + r;
  }
  std::size_t artificial_rows = m;

  std::vector<Rational> y(m);
  std::vector<Rational> direction(m);
  Phase1Result result;

  while (true) {
    Rational objective(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= n) objective += x_basic[i];
    }
    if (artificial_rows == 0 || objective == 0) {
      result.feasible = true;
      result.objective = Rational(0);
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n && x_basic[i] != 0) result.support.emplace_back(basis[i], x_basic[i]);
      }
      return result;
    }

    // Dual estimate of the artificial objective: y = c_B B^-1, where c_B is
    // the indicator of rows whose basic variable is artificial.
    for (std::size_t t = 0; t < m; ++t) y[t] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) continue;
      const std::vector<Rational>& row = binv[i];
      for (std::size_t t = 0; t < m; ++t) {
        if (row[t] != 0) y[t] += row[t];
      }
    }

    // Bland: entering column is the lowest-index structural column with a
    // negative reduced cost, i.e. y summed over its rows positive. Artificials
    // never re-enter: once out of the basis they are dropped for good.
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < n; ++j) {
      if (structural_basic[j]) continue;
      Rational slope(0);
      for (std::int32_t r : columns[j].rows) slope += y[static_cast<std::size_t>(r)];
      if (slope > 0) {
        enter = j;
        break;
      }
    }
    if (enter == kNone) {
      result.feasible = false;
      result.objective = objective;
      result.farkas = y;
      return result;
    }

    // direction = B^-1 A_enter: sum of the columns of B^-1 the unit column hits.
    for (std::size_t i = 0; i < m; ++i) direction[i] = 0;
    for (std::int32_t r : columns[enter].rows) {
      const std::size_t t = static_cast<std::size_t>(r);
      for (std::size_t i = 0; i < m; ++i) {
        if (binv[i][t] != 0) direction[i] += binv[i][t];
      }
    }

    // Ratio test, ties broken toward the smallest basic variable id (Bland).
    std::size_t leave_row = kNone;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (direction[i] <= 0) continue;
      const Rational ratio = x_basic[i] / direction[i];
      if (leave_row == kNone || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave_row])) {
        leave_row = i;
        best_ratio = ratio;
      }
    }
    if (leave_row == kNone) {
      // The phase-1 objective is bounded below by zero, so an unbounded
      // improving ray cannot exist.
      throw std::logic_error("phase-1 simplex found an unbounded direction");
    }

    const std::size_t leaving = basis[leave_row];
    const Rational pivot = direction[leave_row];
    std::vector<Rational>& pivot_row = binv[leave_row];
    if (pivot != 1) {
      for (std::size_t t = 0; t < m; ++t) {
        if (pivot_row[t] != 0) pivot_row[t] /= pivot;
      }
      x_basic[leave_row] /= pivot;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave_row || direction[i] == 0) continue;
      const Rational factor = direction[i];
      std::vector<Rational>& row = binv[i];
      for (std::size_t t = 0; t < m; ++t) {
        if (pivot_row[t] != 0) row[t] -= factor * pivot_row[t];
      }
      if (x_basic[leave_row] != 0) x_basic[i] -= factor * x_basic[leave_row];
    }

    if (leaving >= n) {
      --artificial_rows;
    } else {
      structural_basic[leaving] = 0;
    }
    basis[leave_row] = enter;
    structural_basic[enter] = 1;
    ++result.pivots;
  }
}

}  // namespace bellbound
