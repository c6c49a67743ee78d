#include <doctest.h>

#include <random>

#include "bellbound/errors.hpp"
#include "bellbound/lhv_oracle.hpp"
#include "test_util.hpp"

using namespace bellbound;
using namespace bellbound::testing;

namespace {

// Independent oracle: full enumeration through the behavior/evaluate path,
// no greedy decomposition. First maximizer in enumeration order wins.
LhvMaxResult naive_max(const BellFunctional& f) {
  LhvMaxResult best;
  bool have = false;
  for (StrategyEnumerator e(f.scenario); !e.done(); e.next()) {
    const Rational value = evaluate(f, deterministic_behavior(e.value()));
    if (!have || value > best.max_value) {
      have = true;
      best.max_value = value;
      best.argmax = e.value();
    }
  }
  best.strategies_scanned = total_strategy_count(f.scenario);
  return best;
}

BellFunctional random_functional(std::mt19937_64& rng) {
  BellFunctional f = build_bipartite(2, 2);
  std::uniform_int_distribution<int> coeff(-5, 3);
  for (long long& v : f.joint) v = coeff(rng);
  for (auto& per_party : f.marginals) {
    for (long long& v : per_party) v = coeff(rng);
  }
  return f;
}

}  // namespace

TEST_CASE("constructed functionals have a zero local bound") {
  for (int m_a = 2; m_a <= 4; ++m_a) {
    for (int m_b = 2; m_b <= 4; ++m_b) {
      const LhvMaxResult r = max_bell_value(build_bipartite(m_a, m_b));
      CHECK(r.max_value == 0);
      CHECK(evaluate(build_bipartite(m_a, m_b), deterministic_behavior(r.argmax)) == 0);
    }
  }
  CHECK(max_bell_value(build_multipartite({2, 2, 2})).max_value == 0);
  CHECK(local_bound_certificate(build_bipartite(3, 3)));
  CHECK(local_bound_certificate(build_multipartite({2, 2, 2})));
}

TEST_CASE("all-penalty functionals peak at zero through all-miss") {
  BellFunctional f = build_bipartite(2, 2);
  for (long long& v : f.joint) v = -1;
  for (auto& per_party : f.marginals) {
    for (long long& v : per_party) v = 0;
  }
  const LhvMaxResult r = max_bell_value(f);
  CHECK(r.max_value == 0);
  DeterministicStrategy all_miss;
  all_miss.scenario = f.scenario;
  all_miss.responses = {{2, 2}, {2, 2}};
  CHECK(evaluate(f, deterministic_behavior(all_miss)) == 0);
  CHECK(local_bound_certificate(f));
}

TEST_CASE("dropping the marginal penalties breaks the local bound") {
  BellFunctional f = build_bipartite(2, 2);
  for (auto& per_party : f.marginals) {
    for (long long& v : per_party) v = 0;
  }
  const LhvMaxResult r = max_bell_value(f);
  CHECK(r.max_value >= 1);
  CHECK(!local_bound_certificate(f));
  // One strategy scoring +1: answer only input 1 resp. input 2, hitting the
  // single congruent cell of the (1,2) block.
  DeterministicStrategy d;
  d.scenario = f.scenario;
  d.responses = {{0, 2}, {2, 0}};
  CHECK(evaluate(f, deterministic_behavior(d)) == 1);
}

TEST_CASE("greedy scan equals naive enumeration, argmax included") {
  std::mt19937_64 rng(4242);
  std::vector<BellFunctional> cases = {build_bipartite(2, 2), build_bipartite(2, 3),
                                       build_multipartite({2, 2})};
  for (int i = 0; i < 6; ++i) cases.push_back(random_functional(rng));
  for (const BellFunctional& f : cases) {
    const LhvMaxResult fast = max_bell_value(f);
    const LhvMaxResult slow = naive_max(f);
    CHECK(fast.max_value == slow.max_value);
    CHECK(fast.argmax.responses == slow.argmax.responses);
    CHECK(fast.strategies_scanned == slow.strategies_scanned);
  }
}

TEST_CASE("lowering any joint coefficient never raises the maximum") {
  std::mt19937_64 rng(17);
  const BellFunctional base = build_bipartite(2, 2);
  const Rational before = max_bell_value(base).max_value;
  std::uniform_int_distribution<std::size_t> pick(0, base.joint.size() - 1);
  for (int round = 0; round < 20; ++round) {
    BellFunctional f = base;
    f.joint[pick(rng)] -= 1;
    CHECK(max_bell_value(f).max_value <= before);
  }
}

TEST_CASE("budget guard refuses oversized scans with the count") {
  const BellFunctional f = build_bipartite(2, 2);
  CHECK_THROWS_AS(max_bell_value(f, 80), BudgetExceededError);
  try {
    max_bell_value(f, 80);
  } catch (const BudgetExceededError& e) {
    CHECK(e.required == "81");
  }
}

TEST_CASE("shards merge to the unsharded result") {
  const BellFunctional f = build_bipartite(2, 2);
  const LhvMaxResult whole = max_bell_value(f);
  const std::uint64_t outer = outer_iteration_count(f);
  REQUIRE(outer == 9);

  for (std::uint64_t shards : {2ull, 3ull, 4ull}) {
    bool have = false;
    LhvMaxResult merged;
    for (std::uint64_t i = 0; i < shards; ++i) {
      const std::uint64_t begin = outer * i / shards;
      const std::uint64_t end = outer * (i + 1) / shards;
      if (begin == end) continue;
      const LhvMaxResult part = max_bell_value_shard(f, begin, end);
      if (!have || part.max_value > merged.max_value ||
          (part.max_value == merged.max_value &&
           strategy_ordinal(part.argmax) < strategy_ordinal(merged.argmax))) {
        have = true;
        merged = part;
      }
    }
    CHECK(merged.max_value == whole.max_value);
    CHECK(merged.argmax.responses == whole.argmax.responses);
  }
}

TEST_CASE("table functional maximizer agrees with direct vertex scans") {
  std::mt19937_64 rng(5150);
  const Scenario s(2, {2, 2}, 2);
  for (int round = 0; round < 5; ++round) {
    std::vector<Rational> coeffs(s.table_size());
    std::uniform_int_distribution<int> num(-6, 6);
    for (Rational& c : coeffs) c = Rational(num(rng)) / 3;

    const TableMaxResult fast = max_table_functional(s, coeffs);
    Rational best;
    bool have = false;
    for (StrategyEnumerator e(s); !e.done(); e.next()) {
      const Rational v = dot(coeffs, deterministic_behavior(e.value()));
      if (!have || v > best) {
        best = v;
        have = true;
      }
    }
    CHECK(fast.max_value == best);
    CHECK(dot(coeffs, deterministic_behavior(fast.argmax)) == best);
  }
}
