#include "bellbound/strategies.hpp"

#include <algorithm>
#include <stdexcept>

#include "bellbound/bounds.hpp"
#include "bellbound/errors.hpp"

namespace bellbound {

namespace {

bool is_prime_int(int n) { return n >= 2 && min_prime_geq(n) == n; }

}  // namespace

void LocalModel::validate() const {
  if (components.empty()) throw ValidationError("local model has no components");
  Rational total(0);
  for (const LocalModelComponent& c : components) {
    if (c.weight <= 0) throw ValidationError("component weights must be positive");
    total += c.weight;
    if (static_cast<int>(c.tables.size()) != scenario.num_parties) {
      throw ValidationError("component table count does not match the number of parties");
    }
    for (int i = 0; i < scenario.num_parties; ++i) {
      if (static_cast<int>(c.tables[i].size()) != scenario.inputs_per_party[i]) {
        throw ValidationError("response table rows do not match party inputs");
      }
      for (const std::vector<Rational>& row : c.tables[i]) {
        if (static_cast<int>(row.size()) != scenario.alphabet_size()) {
          throw ValidationError("response row has wrong output count");
        }
        Rational sum(0);
        for (const Rational& p : row) {
          if (p < 0 || p > 1) throw ValidationError("response probability outside [0,1]");
          sum += p;
        }
        if (sum != 1) throw ValidationError("response row does not sum to 1");
      }
    }
  }
  if (total != 1) {
    throw ValidationError("component weights sum to " + format_rational(total) + ", expected 1/1");
  }
}

Behavior modular_box_bipartite(int m_a, int m_b, int prime) {
  if (!is_prime_int(prime)) throw std::invalid_argument("modulus must be prime");
  if (prime < std::max(m_a, m_b)) {
    throw std::invalid_argument("modulus must be at least the larger input count");
  }
  Scenario s(2, {m_a, m_b}, prime);
  std::vector<Rational> table(s.table_size(), Rational(0));
  const Rational weight = Rational(1) / prime;
  const std::size_t per_block = s.outcomes_per_block();
  for (int x = 1; x <= m_a; ++x) {
    for (int y = 1; y <= m_b; ++y) {
      const std::size_t base = s.block_index({x, y}) * per_block;
      const int target = (x * y) % prime;
      for (int a = 0; a < prime; ++a) {
        const int b = ((target - a) % prime + prime) % prime;
        table[base + s.outcome_index({a, b})] = weight;
      }
    }
  }
  return Behavior(std::move(s), std::move(table));
}

Behavior modular_box_multipartite(const std::vector<int>& inputs, int prime) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw std::invalid_argument("multipartite box needs at least two parties");
  if (!is_prime_int(prime)) throw std::invalid_argument("modulus must be prime");
  if (prime <= *std::max_element(inputs.begin(), inputs.end())) {
    throw std::invalid_argument("modulus must exceed every input count");
  }
  Scenario s(n, inputs, prime);
  std::vector<Rational> table(s.table_size(), Rational(0));
  Rational weight(1);
  for (int i = 0; i < n - 1; ++i) weight /= prime;

  const std::size_t per_block = s.outcomes_per_block();
  for (std::size_t block = 0; block < s.input_blocks(); ++block) {
    const std::vector<int> x = s.block_inputs(block);
    int target = 1;
    for (int xi : x) target = (target * xi) % prime;
    // Free outputs for parties 1..N-1; party N completes the congruence.
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    bool more = true;
    while (more) {
      int partial = 0;
      for (int i = 0; i < n - 1; ++i) partial += a[i];
      a[n - 1] = ((target - partial) % prime + prime) % prime;
      table[block * per_block + s.outcome_index(a)] = weight;
      more = false;
      for (int i = n - 2; i >= 0; --i) {
        if (a[i] < prime - 1) {
          ++a[i];
          more = true;
          break;
        }
        a[i] = 0;
      }
    }
  }
  return Behavior(std::move(s), std::move(table));
}

BigInt total_strategy_count(const Scenario& s) {
  BigInt count(1);
  for (int i = 0; i < s.num_parties; ++i) {
    for (int x = 0; x < s.inputs_per_party[i]; ++x) count *= s.alphabet_size();
  }
  return count;
}

DeterministicStrategy strategy_from_ordinal(const Scenario& s, std::uint64_t ordinal) {
  DeterministicStrategy d;
  d.scenario = s;
  d.responses.resize(static_cast<std::size_t>(s.num_parties));
  for (int i = 0; i < s.num_parties; ++i) {
    d.responses[i].assign(static_cast<std::size_t>(s.inputs_per_party[i]), 0);
  }
  const std::uint64_t base = static_cast<std::uint64_t>(s.alphabet_size());
  for (int i = s.num_parties - 1; i >= 0; --i) {
    for (int x = s.inputs_per_party[i] - 1; x >= 0; --x) {
      d.responses[i][x] = static_cast<int>(ordinal % base);
      ordinal /= base;
    }
  }
  if (ordinal != 0) throw std::out_of_range("strategy ordinal beyond the enumeration");
  return d;
}

StrategyEnumerator::StrategyEnumerator(Scenario s) {
  current_.scenario = std::move(s);
  current_.responses.resize(static_cast<std::size_t>(current_.scenario.num_parties));
  for (int i = 0; i < current_.scenario.num_parties; ++i) {
    current_.responses[i].assign(
        static_cast<std::size_t>(current_.scenario.inputs_per_party[i]), 0);
  }
}

void StrategyEnumerator::next() {
  const int last = current_.scenario.no_detection();
  for (int i = current_.scenario.num_parties - 1; i >= 0; --i) {
    for (int x = current_.scenario.inputs_per_party[i] - 1; x >= 0; --x) {
      if (current_.responses[i][x] < last) {
        ++current_.responses[i][x];
        return;
      }
      current_.responses[i][x] = 0;
    }
  }
  done_ = true;
}

std::vector<DeterministicStrategy> enumerate_deterministic(const Scenario& s,
                                                           std::uint64_t budget) {
  const BigInt count = total_strategy_count(s);
  if (count > BigInt(budget)) {
    throw BudgetExceededError("strategy enumeration needs " + count.str() +
                                  " strategies, budget is " + std::to_string(budget) +
                                  "; use the local-polytope LP membership test instead",
                              count.str());
  }
  std::vector<DeterministicStrategy> all;
  all.reserve(static_cast<std::size_t>(count));
  for (StrategyEnumerator e(s); !e.done(); e.next()) all.push_back(e.value());
  return all;
}

Behavior deterministic_behavior(const DeterministicStrategy& d) {
  const Scenario& s = d.scenario;
  std::vector<Rational> table(s.table_size(), Rational(0));
  std::vector<int> outputs(static_cast<std::size_t>(s.num_parties));
  for (std::size_t block = 0; block < s.input_blocks(); ++block) {
    const std::vector<int> inputs = s.block_inputs(block);
    for (int i = 0; i < s.num_parties; ++i) {
      outputs[i] = d.responses[i][static_cast<std::size_t>(inputs[i] - 1)];
    }
    table[block * s.outcomes_per_block() + s.outcome_index(outputs)] = 1;
  }
  return Behavior(s, std::move(table));
}

LocalModel degrade_model(const LocalModel& m, const Rational& eta1, const Rational& eta2) {
  if (eta1 < 0 || eta2 > 1 || eta1 > eta2) {
    throw std::invalid_argument("degradation needs 0 <= eta1 <= eta2 <= 1");
  }
  if (eta2 == 0) {
    if (eta1 > 0) throw std::invalid_argument("cannot raise efficiency above eta2 = 0");
    return m;
  }
  const Rational ratio = eta1 / eta2;
  const int last = m.scenario.no_detection();

  LocalModel out;
  out.scenario = m.scenario;
  out.components.reserve(m.components.size());
  for (const LocalModelComponent& c : m.components) {
    LocalModelComponent nc;
    nc.weight = c.weight;
    nc.tables = c.tables;
    for (auto& party_table : nc.tables) {
      for (auto& row : party_table) {
        for (int a = 0; a < last; ++a) row[a] *= ratio;
        row[last] = 1 - ratio + row[last] * ratio;
      }
    }
    out.components.push_back(std::move(nc));
  }
  return out;
}

Behavior model_behavior(const LocalModel& m) {
  const Scenario& s = m.scenario;
  std::vector<Rational> table(s.table_size(), Rational(0));
  const std::size_t per_block = s.outcomes_per_block();
  for (const LocalModelComponent& c : m.components) {
    for (std::size_t block = 0; block < s.input_blocks(); ++block) {
      const std::vector<int> inputs = s.block_inputs(block);
      for (std::size_t o = 0; o < per_block; ++o) {
        const std::vector<int> outputs = s.outcome_outputs(o);
        Rational p = c.weight;
        for (int i = 0; i < s.num_parties && p != 0; ++i) {
          p *= c.tables[i][static_cast<std::size_t>(inputs[i] - 1)]
                          [static_cast<std::size_t>(outputs[i])];
        }
        if (p != 0) table[block * per_block + o] += p;
      }
    }
  }
  return Behavior(s, std::move(table));
}

}  // namespace bellbound
