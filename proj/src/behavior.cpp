#include "bellbound/behavior.hpp"

#include <sstream>
#include <stdexcept>

#include "bellbound/errors.hpp"

namespace bellbound {

namespace {

std::string joint_input_string(const std::vector<int>& inputs) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out << ",";
    out << inputs[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

Behavior::Behavior(Scenario s, std::vector<Rational> entries)
    : scenario(std::move(s)), table(std::move(entries)) {
  if (table.size() != scenario.table_size()) {
    throw ValidationError("behavior table has " + std::to_string(table.size()) +
                          " entries, scenario needs " + std::to_string(scenario.table_size()));
  }
}

void Behavior::validate() const {
  if (table.size() != scenario.table_size()) {
    throw ValidationError("behavior table size does not match its scenario");
  }
  const std::size_t per_block = scenario.outcomes_per_block();
  for (std::size_t block = 0; block < scenario.input_blocks(); ++block) {
    Rational sum(0);
    for (std::size_t o = 0; o < per_block; ++o) {
      const Rational& p = table[block * per_block + o];
      if (p < 0 || p > 1) {
        throw ValidationError("entry outside [0,1] at joint input " +
                              joint_input_string(scenario.block_inputs(block)));
      }
      sum += p;
    }
    if (sum != 1) {
      throw ValidationError("block at joint input " +
                            joint_input_string(scenario.block_inputs(block)) +
                            " sums to " + format_rational(sum) + ", expected 1/1");
    }
  }
}

bool Behavior::ideal() const {
  const std::size_t per_block = scenario.outcomes_per_block();
  for (std::size_t block = 0; block < scenario.input_blocks(); ++block) {
    for (std::size_t o = 0; o < per_block; ++o) {
      if (table[block * per_block + o] == 0) continue;
      const std::vector<int> outputs = scenario.outcome_outputs(o);
      for (int a : outputs) {
        if (a == scenario.no_detection()) return false;
      }
    }
  }
  return true;
}

NoSignalingReport check_no_signaling(const Behavior& b) {
  b.validate();
  const Scenario& s = b.scenario;
  const std::size_t per_block = s.outcomes_per_block();

  NoSignalingReport report;
  report.worst_violation = Rational(0);

  for (int party = 0; party < s.num_parties; ++party) {
    for (int own_input = 1; own_input <= s.inputs_per_party[party]; ++own_input) {
      for (int own_output = 0; own_output <= s.num_outputs; ++own_output) {
        bool have_first = false;
        Rational lowest, highest;
        std::size_t lowest_block = 0, highest_block = 0;
        for (std::size_t block = 0; block < s.input_blocks(); ++block) {
          const std::vector<int> inputs = s.block_inputs(block);
          if (inputs[party] != own_input) continue;
          Rational m(0);
          for (std::size_t o = 0; o < per_block; ++o) {
            const Rational& p = b.table[block * per_block + o];
            if (p == 0) continue;
            if (s.outcome_outputs(o)[party] == own_output) m += p;
          }
          if (!have_first) {
            lowest = highest = m;
            lowest_block = highest_block = block;
            have_first = true;
          } else if (m < lowest) {
            lowest = m;
            lowest_block = block;
          } else if (m > highest) {
            highest = m;
            highest_block = block;
          }
        }
        const Rational violation = highest - lowest;
        if (violation > report.worst_violation) {
          report.worst_violation = violation;
          report.witness = NoSignalingWitness{party + 1, own_output,
                                              s.block_inputs(highest_block),
                                              s.block_inputs(lowest_block)};
        }
      }
    }
  }
  report.passed = report.worst_violation == 0;
  if (report.passed) report.witness.reset();
  return report;
}

Behavior apply_loss(const Behavior& b, const Rational& eta) {
  if (eta < 0 || eta > 1) throw std::invalid_argument("efficiency must lie in [0,1]");
  if (!b.ideal()) {
    throw ValidationError("loss channel applies to ideal behaviors only (no-detection mass found)");
  }
  const NoSignalingReport ns = check_no_signaling(b);
  if (!ns.passed) {
    throw SignalingError("loss channel rejected a signaling behavior (worst violation " +
                         format_rational(ns.worst_violation) + ")");
  }

  const Scenario& s = b.scenario;
  const int n = s.num_parties;
  const std::size_t per_block = s.outcomes_per_block();
  std::vector<Rational> eta_pow(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> miss_pow(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    eta_pow[k] = rational_pow(eta, static_cast<unsigned>(k));
    miss_pow[k] = rational_pow(1 - eta, static_cast<unsigned>(k));
  }

  std::vector<Rational> out(s.table_size(), Rational(0));
  std::vector<int> detected_outputs(static_cast<std::size_t>(n));
  for (std::size_t block = 0; block < s.input_blocks(); ++block) {
    for (std::size_t o = 0; o < per_block; ++o) {
      const std::vector<int> outputs = s.outcome_outputs(o);
      int detected = 0;
      for (int a : outputs) {
        if (a != s.no_detection()) ++detected;
      }
      // Marginal of the detected parties' outputs, summing the undetected
      // parties out within this input block (equal to the detected-subset
      // marginal for any no-signaling input, which the gate above ensures).
      Rational marg(0);
      if (detected == n) {
        marg = b.table[block * per_block + o];
      } else {
        std::size_t free_count = 1;
        for (int i = 0; i < n - detected; ++i) free_count *= static_cast<std::size_t>(s.num_outputs);
        std::vector<int> fill(static_cast<std::size_t>(n - detected), 0);
        for (std::size_t f = 0; f < free_count; ++f) {
          std::size_t rest = f;
          for (int i = n - detected - 1; i >= 0; --i) {
            fill[i] = static_cast<int>(rest % static_cast<std::size_t>(s.num_outputs));
            rest /= static_cast<std::size_t>(s.num_outputs);
          }
          int fi = 0;
          for (int i = 0; i < n; ++i) {
            detected_outputs[i] = outputs[i] != s.no_detection() ? outputs[i] : fill[fi++];
          }
          marg += b.table[block * per_block + s.outcome_index(detected_outputs)];
        }
      }
      out[block * per_block + o] = eta_pow[detected] * miss_pow[n - detected] * marg;
    }
  }
  return Behavior(s, std::move(out));
}

std::vector<Rational> marginal(const Behavior& b, int party, int input) {
  const Scenario& s = b.scenario;
  if (party < 1 || party > s.num_parties) throw std::invalid_argument("party index out of range");
  if (input < 1 || input > s.inputs_per_party[party - 1]) {
    throw std::invalid_argument("input out of range for party " + std::to_string(party));
  }
  std::vector<int> inputs(static_cast<std::size_t>(s.num_parties), 1);
  inputs[party - 1] = input;
  const std::size_t base = s.block_index(inputs) * s.outcomes_per_block();

  std::vector<Rational> dist(static_cast<std::size_t>(s.alphabet_size()), Rational(0));
  for (std::size_t o = 0; o < s.outcomes_per_block(); ++o) {
    const Rational& p = b.table[base + o];
    if (p == 0) continue;
    dist[static_cast<std::size_t>(s.outcome_outputs(o)[party - 1])] += p;
  }
  return dist;
}

}  // namespace bellbound
