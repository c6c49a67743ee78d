#pragma once

#include <iosfwd>
#include <vector>

#include "bellbound/rational.hpp"

namespace bellbound {

/// Smallest prime >= n (n >= 1). Trial division; inputs here are tiny.
int min_prime_geq(long long n);
/// Smallest prime > n.
int min_prime_gt(long long n);

/// Two-party critical-efficiency bound (M_A + M_B - 2) / (M_A M_B - 1).
/// Refused below two inputs per party, where the formula degenerates.
Rational bipartite_bound(int m_a, int m_b);

struct MultipartiteLower {
  Rational value;
  /// The equal-inputs lower bound N / (M(N-1) + 1) is proved for N <= 500
  /// only; beyond that it is emitted but flagged.
  bool conjectural = false;
};
MultipartiteLower multipartite_lower(int n, int m);

/// (sum_i M_i - N over prod_i M_i - 1)^(1/(N-1)). The radicand is exact;
/// the real root is computed through logarithms of the exact numerator and
/// denominator, with relative error well under 1e-12.
struct RootBound {
  Rational radicand;
  int root_degree = 1;  // N-1
  double value = 0.0;
};
RootBound multipartite_upper(const std::vector<int>& inputs);

struct BoundRow {
  int m = 0;
  int n = 0;
  Rational lower;
  Rational upper_radicand;  // upper = upper_radicand^(1/(n-1))
  double upper = 0.0;
  bool conjectural = false;
};

/// Equal-inputs comparison table: one row per (M in m_list, N in 2..n_max).
std::vector<BoundRow> bounds_table(const std::vector<int>& m_list, int n_max);

/// CSV with header "M,N,lower,upper,conjectural". Default rendering is
/// decimal with 12 significant digits; exact mode renders the lower bound
/// as "p/q" and the upper bound as its radicand, "(p/q)^(1/k)" (plain
/// "p/q" at N=2 where the root degree is 1).
void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows, bool exact);

}  // namespace bellbound
