#pragma once

#include <cstdint>
#include <vector>

#include "bellbound/inequality.hpp"
#include "bellbound/strategies.hpp"

namespace bellbound {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct LhvMaxResult {
  Rational max_value;
  DeterministicStrategy argmax;
  BigInt strategies_scanned;
};

/// Exact maximum of the Bell value over all deterministic strategies, with
/// the first maximizer in enumeration order reported. For fixed responses of
/// parties 1..N-1 the objective decomposes per input of the last party, so
/// the last party is optimized greedily input by input; this is exact and
/// shrinks the scan to the outer parties' response space.
LhvMaxResult max_bell_value(const BellFunctional& f,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of outer iterations (response tables of parties 1..N-1) the scan
/// decomposes into; the unit shards are defined over.
std::uint64_t outer_iteration_count(const BellFunctional& f);

/// Scan restricted to outer ordinals [begin, end). Shards are independent;
/// merge by larger value, then smaller argmax ordinal.
LhvMaxResult max_bell_value_shard(const BellFunctional& f, std::uint64_t begin,
                                  std::uint64_t end,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Position of a strategy in the enumeration order (for merge tie-breaking).
std::uint64_t strategy_ordinal(const DeterministicStrategy& d);

/// True iff the local bound holds, i.e. max_bell_value <= 0.
bool local_bound_certificate(const BellFunctional& f,
                             std::uint64_t budget = kDefaultEnumerationBudget);

struct TableMaxResult {
  Rational max_value;
  DeterministicStrategy argmax;
};

/// Exact maximum over deterministic strategies of a linear functional given
/// directly on behavior coordinates (no-detection outcomes included), indexed
/// like a Behavior table. Same greedy-last-party decomposition as above.
/// Used to normalize and verify separating witnesses.
TableMaxResult max_table_functional(const Scenario& s, const std::vector<Rational>& coeffs,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace bellbound
