#include "bellbound/lhv_oracle.hpp"

#include <stdexcept>

#include "bellbound/errors.hpp"

namespace bellbound {

namespace {

void check_budget(const Scenario& s, std::uint64_t budget) {
  const BigInt total = total_strategy_count(s);
  if (total > BigInt(budget)) {
    throw BudgetExceededError("scan covers " + total.str() + " strategies, budget is " +
                                  std::to_string(budget) +
                                  "; raise the budget or use the LP membership test",
                              total.str());
  }
}

// Response tables of parties 1..N-1, stepped in enumeration order.
struct OuterResponses {
  std::vector<std::vector<int>> tables;

  static OuterResponses at_ordinal(const Scenario& s, std::uint64_t ordinal) {
    OuterResponses outer;
    const int last = s.num_parties - 1;
    outer.tables.resize(static_cast<std::size_t>(last));
    for (int i = 0; i < last; ++i) {
      outer.tables[i].assign(static_cast<std::size_t>(s.inputs_per_party[i]), 0);
    }
    const std::uint64_t base = static_cast<std::uint64_t>(s.alphabet_size());
    for (int i = last - 1; i >= 0; --i) {
      for (int x = s.inputs_per_party[i] - 1; x >= 0; --x) {
        outer.tables[i][x] = static_cast<int>(ordinal % base);
        ordinal /= base;
      }
    }
    return outer;
  }

  void advance(const Scenario& s) {
    for (int i = static_cast<int>(tables.size()) - 1; i >= 0; --i) {
      for (int x = s.inputs_per_party[i] - 1; x >= 0; --x) {
        if (tables[i][x] < s.no_detection()) {
          ++tables[i][x];
          return;
        }
        tables[i][x] = 0;
      }
    }
  }
};

std::vector<std::vector<int>> prefix_input_decoding(const Scenario& s, std::size_t prefix_blocks) {
  const int last = s.num_parties - 1;
  std::vector<std::vector<int>> decoded(prefix_blocks);
  for (std::size_t pb = 0; pb < prefix_blocks; ++pb) {
    std::vector<int> inputs(static_cast<std::size_t>(last));
    std::size_t rest = pb;
    for (int i = last - 1; i >= 0; --i) {
      const std::size_t m = static_cast<std::size_t>(s.inputs_per_party[i]);
      inputs[i] = static_cast<int>(rest % m);  // 0-based here
      rest /= m;
    }
    decoded[pb] = std::move(inputs);
  }
  return decoded;
}

DeterministicStrategy assemble_strategy(const Scenario& s, const OuterResponses& outer,
                                        const std::vector<int>& last_table) {
  DeterministicStrategy d;
  d.scenario = s;
  d.responses = outer.tables;
  d.responses.push_back(last_table);
  return d;
}

}  // namespace

std::uint64_t outer_iteration_count(const BellFunctional& f) {
  const Scenario& s = f.scenario;
  std::uint64_t count = 1;
  for (int i = 0; i < s.num_parties - 1; ++i) {
    for (int x = 0; x < s.inputs_per_party[i]; ++x) {
      count *= static_cast<std::uint64_t>(s.alphabet_size());
    }
  }
  return count;
}

LhvMaxResult max_bell_value_shard(const BellFunctional& f, std::uint64_t begin, std::uint64_t end,
                                  std::uint64_t budget) {
  const Scenario& s = f.scenario;
  check_budget(s, budget);
  if (begin > end || end > outer_iteration_count(f)) {
    throw std::out_of_range("shard range outside the outer enumeration");
  }

  const int n = s.num_parties;
  const int last = n - 1;
  const int prime = f.prime;
  const int m_last = s.inputs_per_party[last];

  std::size_t prefix_blocks = 1;
  for (int i = 0; i < last; ++i) prefix_blocks *= static_cast<std::size_t>(s.inputs_per_party[i]);
  const std::vector<std::vector<int>> prefix_inputs = prefix_input_decoding(s, prefix_blocks);

  std::size_t joint_per_block = 1;
  for (int i = 0; i < n; ++i) joint_per_block *= static_cast<std::size_t>(prime);

  bool have_best = false;
  long long best_value = 0;
  DeterministicStrategy best_strategy;

  // score[x][a] = joint contribution of the last party answering a on input x.
  std::vector<long long> score(static_cast<std::size_t>(m_last) * prime, 0);
  std::vector<int> last_table(static_cast<std::size_t>(m_last), 0);

  OuterResponses outer = OuterResponses::at_ordinal(s, begin);
  for (std::uint64_t ord = begin; ord < end; ++ord, outer.advance(s)) {
    long long outer_marginal = 0;
    for (int i = 0; i < last; ++i) {
      for (int x = 0; x < s.inputs_per_party[i]; ++x) {
        const int a = outer.tables[i][x];
        if (a != s.no_detection()) outer_marginal += f.marginal_at(i + 1, a, x + 1);
      }
    }

    std::fill(score.begin(), score.end(), 0);
    for (std::size_t pb = 0; pb < prefix_blocks; ++pb) {
      // Outputs of the outer parties on this joint input; a no-detection
      // anywhere removes every joint term of the block.
      std::size_t prefix_outcome = 0;
      bool detected = true;
      for (int i = 0; i < last; ++i) {
        const int a = outer.tables[i][static_cast<std::size_t>(prefix_inputs[pb][i])];
        if (a == s.no_detection()) {
          detected = false;
          break;
        }
        prefix_outcome = prefix_outcome * static_cast<std::size_t>(prime) +
                         static_cast<std::size_t>(a);
      }
      if (!detected) continue;
      for (int x = 0; x < m_last; ++x) {
        const std::size_t block = pb * static_cast<std::size_t>(m_last) + static_cast<std::size_t>(x);
        const std::size_t base = block * joint_per_block + prefix_outcome * static_cast<std::size_t>(prime);
        long long* row = score.data() + static_cast<std::size_t>(x) * prime;
        for (int a = 0; a < prime; ++a) row[a] += f.joint[base + static_cast<std::size_t>(a)];
      }
    }

    long long value = outer_marginal;
    for (int x = 0; x < m_last; ++x) {
      // Candidates in outcome order 0..P-1 then no-detection (worth 0);
      // strict improvement keeps the first maximizer.
      long long best_here = 0;
      int best_output = s.no_detection();
      const long long* row = score.data() + static_cast<std::size_t>(x) * prime;
      for (int a = 0; a < prime; ++a) {
        const long long v = row[a] + f.marginal_at(last + 1, a, x + 1);
        if (v > best_here || (v == best_here && a < best_output)) {
          best_here = v;
          best_output = a;
        }
      }
      last_table[static_cast<std::size_t>(x)] = best_output;
      value += best_here;
    }

    if (!have_best || value > best_value) {
      have_best = true;
      best_value = value;
      best_strategy = assemble_strategy(s, outer, last_table);
    }
  }

  if (!have_best) throw std::invalid_argument("empty shard range");

  LhvMaxResult result;
  result.max_value = Rational(best_value);
  result.argmax = std::move(best_strategy);
  BigInt scanned(end - begin);
  for (int x = 0; x < m_last; ++x) scanned *= s.alphabet_size();
  result.strategies_scanned = scanned;
  return result;
}

LhvMaxResult max_bell_value(const BellFunctional& f, std::uint64_t budget) {
  return max_bell_value_shard(f, 0, outer_iteration_count(f), budget);
}

std::uint64_t strategy_ordinal(const DeterministicStrategy& d) {
  std::uint64_t ordinal = 0;
  const std::uint64_t base = static_cast<std::uint64_t>(d.scenario.alphabet_size());
  for (const std::vector<int>& table : d.responses) {
    for (int a : table) ordinal = ordinal * base + static_cast<std::uint64_t>(a);
  }
  return ordinal;
}

bool local_bound_certificate(const BellFunctional& f, std::uint64_t budget) {
  return max_bell_value(f, budget).max_value <= 0;
}

TableMaxResult max_table_functional(const Scenario& s, const std::vector<Rational>& coeffs,
                                    std::uint64_t budget) {
  if (coeffs.size() != s.table_size()) {
    throw std::invalid_argument("coefficient vector does not match the behavior table size");
  }
  check_budget(s, budget);

  const int n = s.num_parties;
  const int last = n - 1;
  const int alphabet = s.alphabet_size();
  const int m_last = s.inputs_per_party[last];

  std::size_t prefix_blocks = 1;
  for (int i = 0; i < last; ++i) prefix_blocks *= static_cast<std::size_t>(s.inputs_per_party[i]);
  const std::vector<std::vector<int>> prefix_inputs = prefix_input_decoding(s, prefix_blocks);
  const std::size_t per_block = s.outcomes_per_block();

  std::uint64_t outer_count = 1;
  for (int i = 0; i < last; ++i) {
    for (int x = 0; x < s.inputs_per_party[i]; ++x) {
      outer_count *= static_cast<std::uint64_t>(alphabet);
    }
  }

  bool have_best = false;
  Rational best_value;
  DeterministicStrategy best_strategy;

  std::vector<Rational> score(static_cast<std::size_t>(m_last) * alphabet);
  std::vector<int> last_table(static_cast<std::size_t>(m_last), 0);

  OuterResponses outer = OuterResponses::at_ordinal(s, 0);
  for (std::uint64_t ord = 0; ord < outer_count; ++ord, outer.advance(s)) {
    std::fill(score.begin(), score.end(), Rational(0));
    for (std::size_t pb = 0; pb < prefix_blocks; ++pb) {
      std::size_t prefix_outcome = 0;
      for (int i = 0; i < last; ++i) {
        prefix_outcome = prefix_outcome * static_cast<std::size_t>(alphabet) +
                         static_cast<std::size_t>(
                             outer.tables[i][static_cast<std::size_t>(prefix_inputs[pb][i])]);
      }
      for (int x = 0; x < m_last; ++x) {
        const std::size_t block = pb * static_cast<std::size_t>(m_last) + static_cast<std::size_t>(x);
        const std::size_t base = block * per_block + prefix_outcome * static_cast<std::size_t>(alphabet);
        for (int a = 0; a < alphabet; ++a) {
          score[static_cast<std::size_t>(x) * alphabet + a] += coeffs[base + static_cast<std::size_t>(a)];
        }
      }
    }

    Rational value(0);
    for (int x = 0; x < m_last; ++x) {
      int best_output = 0;
      Rational best_here = score[static_cast<std::size_t>(x) * alphabet];
      for (int a = 1; a < alphabet; ++a) {
        const Rational& v = score[static_cast<std::size_t>(x) * alphabet + a];
        if (v > best_here) {
          best_here = v;
          best_output = a;
        }
      }
      last_table[static_cast<std::size_t>(x)] = best_output;
      value += best_here;
    }

    if (!have_best || value > best_value) {
      have_best = true;
      best_value = value;
      best_strategy = assemble_strategy(s, outer, last_table);
    }
  }

  return TableMaxResult{std::move(best_value), std::move(best_strategy)};
}

}  // namespace bellbound
