#pragma once

#include <cstdint>
#include <vector>

#include "bellbound/behavior.hpp"
#include "bellbound/rational.hpp"
#include "bellbound/scenario.hpp"

namespace bellbound {

/// Per-party response functions input -> output-or-no-detection.
/// responses[i][x-1] is party i+1's output on input x, with the
/// no-detection symbol encoded as P.
struct DeterministicStrategy {
  Scenario scenario;
  std::vector<std::vector<int>> responses;

  bool operator==(const DeterministicStrategy&) const = default;
};

/// Finite mixture of per-party stochastic response tables. Components carry
/// stochastic rows (not merely deterministic ones) because efficiency
/// degradation produces stochastic rows even from deterministic input.
struct LocalModelComponent {
  Rational weight;
  /// tables[i][x-1] is a distribution over outputs 0..P (size P+1).
  std::vector<std::vector<std::vector<Rational>>> tables;
};

struct LocalModel {
  Scenario scenario;
  std::vector<LocalModelComponent> components;

  /// Weights positive and summing to 1, every response row summing to 1.
  void validate() const;
};

/// Uniform-over-congruence box: p(a,b|x,y) = 1/P when a+b = x*y (mod P),
/// zero otherwise. Requires P prime with P >= max(M_A, M_B).
Behavior modular_box_bipartite(int m_a, int m_b, int prime);

/// N-party version: p(a|x) = P^-(N-1) when sum_i a_i = prod_i x_i (mod P).
/// Requires P prime with P > max(M_i) and N >= 2.
Behavior modular_box_multipartite(const std::vector<int>& inputs, int prime);

/// prod_i (P+1)^(M_i), never overflows.
BigInt total_strategy_count(const Scenario& s);

/// Strategy at a given position in the enumeration order: lexicographic over
/// the concatenated response tables (party 1 first, its input 1 first), with
/// outputs ordered 0..P-1 and no-detection last.
DeterministicStrategy strategy_from_ordinal(const Scenario& s, std::uint64_t ordinal);

/// Streams all deterministic strategies in enumeration order exactly once.
class StrategyEnumerator {
 public:
  explicit StrategyEnumerator(Scenario s);

  bool done() const { return done_; }
  const DeterministicStrategy& value() const { return current_; }
  void next();

 private:
  DeterministicStrategy current_;
  bool done_ = false;
};

/// Materializes the full enumeration. Refuses (rather than truncates) when
/// the count exceeds the budget; scenarios that large should go through the
/// local-polytope LP instead.
std::vector<DeterministicStrategy> enumerate_deterministic(const Scenario& s,
                                                           std::uint64_t budget = 1u << 20);

/// Point-mass behavior p(a|x) = 1 iff a_i = F_i(x_i) for every party.
Behavior deterministic_behavior(const DeterministicStrategy& d);

/// Efficiency degradation of a local model from eta2 down to eta1: each
/// response row keeps its real-output mass scaled by eta1/eta2 and moves the
/// rest to no-detection. If the input model reproduces the eta2-lossy version
/// of an ideal behavior, the output reproduces the eta1-lossy version.
LocalModel degrade_model(const LocalModel& m, const Rational& eta1, const Rational& eta2);

/// Mixture behavior sum_k w_k prod_i p_i(a_i|x_i,k).
Behavior model_behavior(const LocalModel& m);

}  // namespace bellbound
