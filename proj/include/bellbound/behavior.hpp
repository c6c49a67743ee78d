#pragma once

#include <optional>
#include <vector>

#include "bellbound/rational.hpp"
#include "bellbound/scenario.hpp"

namespace bellbound {

/// Conditional probability table p(a|x) over all joint inputs and joint
/// outputs, no-detection included. Immutable value type in spirit: nothing
/// in the library mutates a Behavior after construction.
struct Behavior {
  Scenario scenario;
  std::vector<Rational> table;

  Behavior() = default;
  Behavior(Scenario s, std::vector<Rational> entries);

  const Rational& at(const std::vector<int>& inputs, const std::vector<int>& outputs) const {
    return table[scenario.table_index(inputs, outputs)];
  }

  /// Entries in [0,1] and every per-input block summing to exactly 1.
  /// Throws ValidationError naming the offending joint input otherwise.
  void validate() const;

  /// True when every entry with at least one no-detection output is zero.
  bool ideal() const;

  bool operator==(const Behavior&) const = default;
};

struct NoSignalingWitness {
  int party = 0;  // 1-based
  int output = 0;
  std::vector<int> inputs_a;
  std::vector<int> inputs_b;
};

struct NoSignalingReport {
  bool passed = false;
  Rational worst_violation;
  std::optional<NoSignalingWitness> witness;
};

/// Exact no-signaling check: for every party k, output a_k and pair of joint
/// inputs agreeing on x_k, the marginal of a_k must be identical. The report
/// carries the largest absolute marginal difference and a witness pair
/// attaining it. There is no tolerance; passed means violation exactly zero.
NoSignalingReport check_no_signaling(const Behavior& b);

/// Independent-detector loss channel at efficiency eta: every party's output
/// survives with probability eta and is replaced by the no-detection symbol
/// otherwise, independently of the input and of the other parties. Requires
/// an ideal (no no-detection mass) no-signaling behavior.
Behavior apply_loss(const Behavior& b, const Rational& eta);

/// Distribution of party's output (size P+1, no-detection last) for the given
/// input, with all other parties' inputs fixed to the canonical value 1. On a
/// no-signaling behavior this equals the marginal under any other fixing;
/// the canonical fixing keeps the operation total on signaling tables.
/// party is 1-based, input is 1-based.
std::vector<Rational> marginal(const Behavior& b, int party, int input);

}  // namespace bellbound
