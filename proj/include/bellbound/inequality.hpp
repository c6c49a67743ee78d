#pragma once

#include <cstdint>
#include <vector>

#include "bellbound/behavior.hpp"
#include "bellbound/rational.hpp"
#include "bellbound/scenario.hpp"

namespace bellbound {

/// Bell functional I = sum f(a,x) p(a|x) + sum_i sum g_i(a_i,x_i) p(a_i|x_i),
/// with joint coefficients over real outputs only (no-detection events enter
/// the value solely through the marginal terms' complement). Coefficients are
/// exact integers; the penalty magnitude is stored explicitly so files
/// round-trip bit-exact.
struct BellFunctional {
  Scenario scenario;
  int prime = 2;
  long long penalty = 0;
  /// Dense, indexed like a behavior table restricted to real outputs:
  /// inputs slowest (party 1 outermost), outputs 0..P-1 with party N fastest.
  std::vector<long long> joint;
  /// marginals[i][(x-1)*P + a] = g_{i+1}(a, x).
  std::vector<std::vector<long long>> marginals;

  std::size_t joint_outcomes_per_block() const;  // P^N
  std::size_t joint_size() const;
  long long joint_at(const std::vector<int>& inputs, const std::vector<int>& outputs) const;
  long long marginal_at(int party, int output, int input) const;  // party 1-based
};

/// Two-party functional over the minimal prime P >= max(M_A, M_B):
/// +1 on a+b = x*y (mod P) away from the all-ones input, 0 on it at the
/// all-ones input, -P^4 elsewhere; marginal coefficient -1 for every real
/// output at inputs beyond the first.
BellFunctional build_bipartite(int m_a, int m_b);

/// N-party generalization over the minimal prime P strictly greater than
/// every M_i: +1/0/-P^(2N) by the same rule with sum_i a_i = prod_i x_i
/// (mod P). The strict prime rule is what makes every input nonzero mod P.
BellFunctional build_multipartite(const std::vector<int>& inputs);

/// Exact Bell value of a behavior. The behavior may carry no-detection mass;
/// its scenario must match the functional's. Signaling behaviors are refused
/// unless allow_signaling is set, in which case canonical marginals are used.
Rational evaluate(const BellFunctional& f, const Behavior& b, bool allow_signaling = false);

}  // namespace bellbound
