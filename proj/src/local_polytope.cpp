#include "bellbound/local_polytope.hpp"

#include <stdexcept>

#include "bellbound/errors.hpp"
#include "bellbound/lhv_oracle.hpp"
#include "bellbound/simplex.hpp"

namespace bellbound {

namespace {

// Vertex column of the constraint matrix: for every input block, a 1 in the
// row of the outcome the strategy produces. The per-block normalization of
// behaviors makes an explicit sum-of-weights row redundant, so there is none.
UnitColumn vertex_column(const Scenario& s, const DeterministicStrategy& d) {
  UnitColumn col;
  col.rows.reserve(s.input_blocks());
  std::vector<int> outputs(static_cast<std::size_t>(s.num_parties));
  for (std::size_t block = 0; block < s.input_blocks(); ++block) {
    const std::vector<int> inputs = s.block_inputs(block);
    for (int i = 0; i < s.num_parties; ++i) {
      outputs[i] = d.responses[i][static_cast<std::size_t>(inputs[i] - 1)];
    }
    col.rows.push_back(static_cast<std::int32_t>(block * s.outcomes_per_block() +
                                                 s.outcome_index(outputs)));
  }
  return col;
}

LocalModelComponent point_mass_component(const Scenario& s, const DeterministicStrategy& d,
                                         Rational weight) {
  LocalModelComponent c;
  c.weight = std::move(weight);
  c.tables.resize(static_cast<std::size_t>(s.num_parties));
  for (int i = 0; i < s.num_parties; ++i) {
    c.tables[i].assign(static_cast<std::size_t>(s.inputs_per_party[i]),
                       std::vector<Rational>(static_cast<std::size_t>(s.alphabet_size()),
                                             Rational(0)));
    for (int x = 0; x < s.inputs_per_party[i]; ++x) {
      c.tables[i][x][static_cast<std::size_t>(d.responses[i][x])] = 1;
    }
  }
  return c;
}

}  // namespace

LocalityVerdict is_local(const Behavior& b, std::uint64_t column_budget) {
  b.validate();
  const Scenario& s = b.scenario;
  const BigInt vertex_count = total_strategy_count(s);
  if (vertex_count > BigInt(column_budget)) {
    throw BudgetExceededError("local polytope has " + vertex_count.str() +
                                  " vertices, LP column budget is " +
                                  std::to_string(column_budget),
                              vertex_count.str());
  }
  const std::size_t columns = static_cast<std::size_t>(vertex_count);

  std::vector<UnitColumn> matrix;
  matrix.reserve(columns);
  for (StrategyEnumerator e(s); !e.done(); e.next()) {
    matrix.push_back(vertex_column(s, e.value()));
  }

  Phase1Result lp = phase1_feasibility(s.table_size(), matrix, b.table);

  LocalityVerdict verdict;
  verdict.lp_pivots = lp.pivots;
  if (lp.feasible) {
    LocalModel model;
    model.scenario = s;
    for (const auto& [column, weight] : lp.support) {
      model.components.push_back(point_mass_component(
          s, strategy_from_ordinal(s, static_cast<std::uint64_t>(column)), weight));
    }
    model.validate();
    verdict.model = std::move(model);
    return verdict;
  }

  // Shift the Farkas functional by a per-coordinate constant (every vertex and
  // every behavior covers each input block with total mass 1, so this changes
  // all values uniformly) until its maximum over vertices is exactly 0.
  SeparatingWitness witness;
  witness.coeffs = std::move(lp.farkas);
  const TableMaxResult vertex_max = max_table_functional(s, witness.coeffs);
  if (vertex_max.max_value > 0) {
    throw std::logic_error("Farkas certificate fails on a vertex");
  }
  if (vertex_max.max_value != 0) {
    const Rational shift = vertex_max.max_value / Rational(static_cast<long long>(s.input_blocks()));
    for (Rational& c : witness.coeffs) c -= shift;
  }
  Rational gap(0);
  for (std::size_t t = 0; t < witness.coeffs.size(); ++t) {
    if (b.table[t] != 0) gap += witness.coeffs[t] * b.table[t];
  }
  if (gap <= 0) throw std::logic_error("Farkas certificate fails on the behavior");
  witness.gap = std::move(gap);
  verdict.witness = std::move(witness);
  return verdict;
}

CriticalEta critical_eta(const Behavior& b, const Rational& tol, std::uint64_t column_budget) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (!b.ideal()) {
    throw ValidationError("critical efficiency is defined for ideal behaviors only");
  }

  LocalityVerdict at_one = is_local(apply_loss(b, Rational(1)), column_budget);
  if (at_one.feasible()) {
    CriticalEta result;
    result.lower = 1;
    result.upper = 1;
    result.width = 0;
    result.lower_model = std::move(at_one.model);
    return result;
  }

  CriticalEta result;
  result.lower = 0;
  result.upper = 1;
  result.upper_witness = std::move(at_one.witness);

  LocalityVerdict at_zero = is_local(apply_loss(b, Rational(0)), column_budget);
  if (!at_zero.feasible()) {
    throw std::logic_error("fully lossy behavior must be local");
  }
  result.lower_model = std::move(at_zero.model);

  while (result.upper - result.lower > tol) {
    const Rational mid = (result.lower + result.upper) / 2;
    LocalityVerdict verdict = is_local(apply_loss(b, mid), column_budget);
    if (verdict.feasible()) {
      result.lower = mid;
      result.lower_model = std::move(verdict.model);
    } else {
      result.upper = mid;
      result.upper_witness = std::move(verdict.witness);
    }
  }
  result.width = result.upper - result.lower;
  return result;
}

}  // namespace bellbound
