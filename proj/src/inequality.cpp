#include "bellbound/inequality.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bellbound/bounds.hpp"
#include "bellbound/errors.hpp"

namespace bellbound {

namespace {

long long checked_penalty(int prime, int exponent, std::size_t joint_terms) {
  BigInt p(1);
  for (int i = 0; i < exponent; ++i) p *= prime;
  // The oracle accumulates joint terms in 64-bit; keep the worst case in range.
  const BigInt worst = p * BigInt(static_cast<unsigned long long>(joint_terms) + 1);
  if (worst > BigInt(std::numeric_limits<long long>::max())) {
    throw std::overflow_error("penalty " + p.str() + " is too large for 64-bit evaluation");
  }
  return static_cast<long long>(p);
}

int product_mod(const std::vector<int>& inputs, int prime) {
  int r = 1;
  for (int x : inputs) r = (r * (x % prime)) % prime;
  return r;
}

}  // namespace

std::size_t BellFunctional::joint_outcomes_per_block() const {
  std::size_t n = 1;
  for (int i = 0; i < scenario.num_parties; ++i) n *= static_cast<std::size_t>(prime);
  return n;
}

std::size_t BellFunctional::joint_size() const {
  return scenario.input_blocks() * joint_outcomes_per_block();
}

long long BellFunctional::joint_at(const std::vector<int>& inputs,
                                   const std::vector<int>& outputs) const {
  std::size_t index = scenario.block_index(inputs) * joint_outcomes_per_block();
  std::size_t o = 0;
  for (int i = 0; i < scenario.num_parties; ++i) {
    if (outputs[i] < 0 || outputs[i] >= prime) {
      throw std::invalid_argument("joint coefficients cover real outputs only");
    }
    o = o * static_cast<std::size_t>(prime) + static_cast<std::size_t>(outputs[i]);
  }
  return joint[index + o];
}

long long BellFunctional::marginal_at(int party, int output, int input) const {
  return marginals[static_cast<std::size_t>(party - 1)]
                  [static_cast<std::size_t>(input - 1) * static_cast<std::size_t>(prime) +
                   static_cast<std::size_t>(output)];
}

BellFunctional build_bipartite(int m_a, int m_b) {
  if (m_a < 1 || m_b < 1) throw std::invalid_argument("input counts must be at least 1");
  const int prime = min_prime_geq(std::max(m_a, m_b));

  BellFunctional f;
  f.scenario = Scenario(2, {m_a, m_b}, prime);
  f.prime = prime;

  const std::size_t joint_terms = f.joint_size();
  f.penalty = checked_penalty(prime, 4, joint_terms);
  f.joint.assign(joint_terms, 0);

  std::size_t index = 0;
  for (int x = 1; x <= m_a; ++x) {
    for (int y = 1; y <= m_b; ++y) {
      const int target = (x * y) % prime;
      for (int a = 0; a < prime; ++a) {
        for (int b = 0; b < prime; ++b, ++index) {
          if ((a + b) % prime == target) {
            f.joint[index] = (x > 1 || y > 1) ? 1 : 0;
          } else {
            f.joint[index] = -f.penalty;
          }
        }
      }
    }
  }

  f.marginals.resize(2);
  for (int party = 0; party < 2; ++party) {
    const int m = party == 0 ? m_a : m_b;
    f.marginals[party].assign(static_cast<std::size_t>(m) * prime, 0);
    for (int x = 2; x <= m; ++x) {
      for (int a = 0; a < prime; ++a) {
        f.marginals[party][static_cast<std::size_t>(x - 1) * prime + a] = -1;
      }
    }
  }
  return f;
}

BellFunctional build_multipartite(const std::vector<int>& inputs) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("multipartite construction needs at least two parties");
  for (int m : inputs) {
    if (m < 1) throw std::invalid_argument("input counts must be at least 1");
  }
  const int prime = min_prime_gt(*std::max_element(inputs.begin(), inputs.end()));

  BellFunctional f;
  f.scenario = Scenario(n, inputs, prime);
  f.prime = prime;

  const std::size_t joint_terms = f.joint_size();
  f.penalty = checked_penalty(prime, 2 * n, joint_terms);
  f.joint.assign(joint_terms, 0);

  const std::size_t per_block = f.joint_outcomes_per_block();
  for (std::size_t block = 0; block < f.scenario.input_blocks(); ++block) {
    const std::vector<int> x = f.scenario.block_inputs(block);
    const int target = product_mod(x, prime);
    const bool beyond_first = std::any_of(x.begin(), x.end(), [](int v) { return v != 1; });
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (std::size_t o = 0; o < per_block; ++o) {
      std::size_t rest = o;
      int sum = 0;
      for (int i = n - 1; i >= 0; --i) {
        a[i] = static_cast<int>(rest % static_cast<std::size_t>(prime));
        rest /= static_cast<std::size_t>(prime);
        sum += a[i];
      }
      if (sum % prime == target) {
        f.joint[block * per_block + o] = beyond_first ? 1 : 0;
      } else {
        f.joint[block * per_block + o] = -f.penalty;
      }
    }
  }

  f.marginals.resize(static_cast<std::size_t>(n));
  for (int party = 0; party < n; ++party) {
    f.marginals[party].assign(static_cast<std::size_t>(inputs[party]) * prime, 0);
    for (int x = 2; x <= inputs[party]; ++x) {
      for (int a = 0; a < prime; ++a) {
        f.marginals[party][static_cast<std::size_t>(x - 1) * prime + a] = -1;
      }
    }
  }
  return f;
}

Rational evaluate(const BellFunctional& f, const Behavior& b, bool allow_signaling) {
  if (b.scenario != f.scenario) {
    throw ScenarioMismatchError("behavior and functional scenarios differ");
  }
  if (!allow_signaling) {
    const NoSignalingReport ns = check_no_signaling(b);
    if (!ns.passed) {
      throw SignalingError("evaluation refused on a signaling behavior (worst violation " +
                           format_rational(ns.worst_violation) + ")");
    }
  } else {
    b.validate();
  }

  const Scenario& s = f.scenario;
  Rational value(0);

  const std::size_t joint_per_block = f.joint_outcomes_per_block();
  std::vector<int> outputs(static_cast<std::size_t>(s.num_parties), 0);
  for (std::size_t block = 0; block < s.input_blocks(); ++block) {
    const std::size_t behavior_base = block * s.outcomes_per_block();
    std::size_t o = 0;
    do {
      const long long c = f.joint[block * joint_per_block + o];
      ++o;
      if (c == 0) continue;
      const Rational& p = b.table[behavior_base + s.outcome_index(outputs)];
      if (p == 0) continue;
      value += Rational(c) * p;
    } while (next_joint_output(outputs, f.prime));
  }

  for (int party = 1; party <= s.num_parties; ++party) {
    for (int input = 1; input <= s.inputs_per_party[party - 1]; ++input) {
      bool any = false;
      for (int a = 0; a < f.prime; ++a) {
        if (f.marginal_at(party, a, input) != 0) {
          any = true;
          break;
        }
      }
      if (!any) continue;
      const std::vector<Rational> dist = marginal(b, party, input);
      for (int a = 0; a < f.prime; ++a) {
        const long long c = f.marginal_at(party, a, input);
        if (c != 0 && dist[static_cast<std::size_t>(a)] != 0) {
          value += Rational(c) * dist[static_cast<std::size_t>(a)];
        }
      }
    }
  }
  return value;
}

}  // namespace bellbound
