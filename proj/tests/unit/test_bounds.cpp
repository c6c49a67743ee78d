#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bellbound/bounds.hpp"

using namespace bellbound;

TEST_CASE("prime helpers") {
  CHECK(min_prime_geq(1) == 2);
  CHECK(min_prime_geq(2) == 2);
  CHECK(min_prime_geq(3) == 3);
  CHECK(min_prime_geq(4) == 5);
  CHECK(min_prime_gt(2) == 3);
  CHECK(min_prime_gt(4) == 5);
  CHECK(min_prime_gt(256) == 257);
  CHECK_THROWS_AS(min_prime_geq(0), std::invalid_argument);
}

TEST_CASE("two-party bound values") {
  CHECK(bipartite_bound(2, 2) == Rational(2) / 3);
  CHECK(bipartite_bound(3, 3) == Rational(1) / 2);
  CHECK(bipartite_bound(256, 256) == Rational(510) / 65535);
  CHECK_THROWS_AS(bipartite_bound(1, 2), std::invalid_argument);
}

TEST_CASE("multipartite lower bound and its conjectural flag") {
  CHECK(multipartite_lower(2, 2).value == Rational(2) / 3);
  CHECK(!multipartite_lower(2, 2).conjectural);
  CHECK(multipartite_lower(3, 2).value == Rational(3) / 5);
  CHECK(multipartite_lower(500, 2).conjectural == false);
  CHECK(multipartite_lower(501, 2).conjectural == true);
  CHECK_THROWS_AS(multipartite_lower(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(multipartite_lower(2, 1), std::invalid_argument);
  // The limit in N is 1/M.
  const Rational far = multipartite_lower(100000, 4).value;
  CHECK(far > Rational(1) / 4);
  CHECK(far - Rational(1) / 4 < Rational(1, 100000));
}

TEST_CASE("multipartite upper bound radicands and roots") {
  const RootBound triple = multipartite_upper({8, 8, 8});
  CHECK(triple.radicand == Rational(21) / 511);
  CHECK(triple.root_degree == 2);
  CHECK(triple.value == doctest::Approx(0.2027212135).epsilon(1e-9));

  const RootBound two = multipartite_upper({5, 7});
  CHECK(two.radicand == bipartite_bound(5, 7));
  CHECK(two.root_degree == 1);
  CHECK(two.value == doctest::Approx(static_cast<double>(bipartite_bound(5, 7))).epsilon(1e-12));

  const RootBound ghz = multipartite_upper({2, 2, 2});
  CHECK(ghz.radicand == Rational(3) / 7);
  CHECK(ghz.value == doctest::Approx(std::sqrt(3.0 / 7.0)).epsilon(1e-12));

  CHECK_THROWS_AS(multipartite_upper({4}), std::invalid_argument);
  CHECK_THROWS_AS(multipartite_upper({1, 4}), std::invalid_argument);
}

TEST_CASE("bound table rows, equality at N=2 and tightness direction") {
  const std::vector<BoundRow> rows = bounds_table({4, 16}, 60);
  REQUIRE(rows.size() == 2 * 59);
  for (const BoundRow& row : rows) {
    if (row.n == 2) {
      CHECK(row.lower == row.upper_radicand);  // exact coincidence of the bounds
      CHECK(row.lower == Rational(2) / (row.m + 1));
    }
    CHECK(static_cast<double>(row.lower) <= row.upper + 1e-12);
    CHECK(!row.conjectural);
  }
  // Monotone in N for fixed M, and approaching 1/M from above.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].m != rows[i - 1].m) continue;
    CHECK(rows[i].upper <= rows[i - 1].upper + 1e-15);
    CHECK(rows[i].lower < rows[i - 1].lower);
    CHECK(rows[i].upper > 1.0 / rows[i].m);
  }
}

TEST_CASE("conjectural rows appear past five hundred parties") {
  const std::vector<BoundRow> rows = bounds_table({2}, 502);
  int flagged = 0;
  for (const BoundRow& row : rows) {
    if (row.conjectural) {
      ++flagged;
      CHECK(row.n > 500);
    }
  }
  CHECK(flagged == 2);
}

TEST_CASE("csv rendering, decimal and exact") {
  std::ostringstream decimal;
  write_bounds_csv(decimal, bounds_table({4}, 3), false);
  std::istringstream lines(decimal.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "M,N,lower,upper,conjectural");
  std::getline(lines, line);
  CHECK(line == "4,2,0.4,0.4,false");
  std::getline(lines, line);
  CHECK(line.substr(0, 4) == "4,3,");
  CHECK(line.find("0.37796") != std::string::npos);

  std::ostringstream exact;
  write_bounds_csv(exact, bounds_table({4}, 3), true);
  std::istringstream exact_lines(exact.str());
  std::getline(exact_lines, line);
  std::getline(exact_lines, line);
  CHECK(line == "4,2,2/5,2/5,false");
  std::getline(exact_lines, line);
  CHECK(line == "4,3,1/3,(1/7)^(1/2),false");
}
