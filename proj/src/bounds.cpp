#include "bellbound/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bellbound {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string decimal(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

}  // namespace

int min_prime_geq(long long n) {
  if (n < 1) throw std::invalid_argument("min_prime_geq needs n >= 1");
  long long p = n < 2 ? 2 : n;
  while (!is_prime(p)) ++p;
  return static_cast<int>(p);
}

int min_prime_gt(long long n) { return min_prime_geq(n + 1); }

Rational bipartite_bound(int m_a, int m_b) {
  if (m_a < 2 || m_b < 2) {
    throw std::invalid_argument("bipartite bound needs at least two inputs per party");
  }
  return Rational(m_a + m_b - 2) / Rational(static_cast<long long>(m_a) * m_b - 1);
}

MultipartiteLower multipartite_lower(int n, int m) {
  if (n < 2 || m < 2) {
    throw std::invalid_argument("multipartite lower bound needs N >= 2 and M >= 2");
  }
  MultipartiteLower result;
  result.value = Rational(n) / Rational(static_cast<long long>(m) * (n - 1) + 1);
  result.conjectural = n > 500;
  return result;
}

RootBound multipartite_upper(const std::vector<int>& inputs) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("multipartite upper bound needs at least two parties");
  long long sum = 0;
  BigInt prod(1);
  for (int m : inputs) {
    if (m < 2) throw std::invalid_argument("multipartite upper bound needs M_i >= 2");
    sum += m;
    prod *= m;
  }
  RootBound result;
  result.radicand = Rational(BigInt(sum - n)) / Rational(prod - 1);
  result.root_degree = n - 1;
  result.value = std::exp(log_rational(result.radicand) / (n - 1));
  return result;
}

std::vector<BoundRow> bounds_table(const std::vector<int>& m_list, int n_max) {
  std::vector<BoundRow> rows;
  for (int m : m_list) {
    for (int n = 2; n <= n_max; ++n) {
      BoundRow row;
      row.m = m;
      row.n = n;
      const MultipartiteLower lower = multipartite_lower(n, m);
      row.lower = lower.value;
      row.conjectural = lower.conjectural;
      const RootBound upper = multipartite_upper(std::vector<int>(static_cast<std::size_t>(n), m));
      row.upper_radicand = upper.radicand;
      row.upper = upper.value;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundRow>& rows, bool exact) {
  out << "M,N,lower,upper,conjectural\n";
  for (const BoundRow& row : rows) {
    out << row.m << "," << row.n << ",";
    if (exact) {
      out << format_rational(row.lower) << ",";
      if (row.n == 2) {
        out << format_rational(row.upper_radicand);
      } else {
        out << "(" << format_rational(row.upper_radicand) << ")^(1/" << (row.n - 1) << ")";
      }
    } else {
      out << decimal(static_cast<double>(row.lower)) << "," << decimal(row.upper);
    }
    out << "," << (row.conjectural ? "true" : "false") << "\n";
  }
}

}  // namespace bellbound
