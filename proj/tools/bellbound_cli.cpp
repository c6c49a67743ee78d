// bellbound: construct efficiency-robust Bell functionals and no-signaling
// boxes, evaluate Bell values exactly, certify locality via brute-force
// enumeration or exact LP membership, and print bound tables.
//
// Exit codes: 0 success (local / no-signaling / bracket found),
//             2 negative verdict (nonlocal / signaling),
//             1 error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "bellbound/bounds.hpp"
#include "bellbound/inequality.hpp"
#include "bellbound/json_io.hpp"
#include "bellbound/lhv_oracle.hpp"
#include "bellbound/local_polytope.hpp"
#include "bellbound/strategies.hpp"

using namespace bellbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

std::uint64_t resolve_budget(std::uint64_t flag_value, std::uint64_t fallback) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("BELLBOUND_BUDGET")) {
    const unsigned long long parsed = std::stoull(env);
    if (parsed > 0) return parsed;
  }
  return fallback;
}

void print_strategy(const DeterministicStrategy& d) {
  for (std::size_t i = 0; i < d.responses.size(); ++i) {
    std::cout << "argmax party " << (i + 1) << ":";
    for (int a : d.responses[i]) {
      if (a == d.scenario.no_detection()) {
        std::cout << " miss";
      } else {
        std::cout << " " << a;
      }
    }
    std::cout << "\n";
  }
}

struct ShardSpec {
  std::uint64_t index = 0;
  std::uint64_t total = 1;
};

ShardSpec parse_shard(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) throw CLI::ValidationError("--shard", "expected INDEX/TOTAL");
  ShardSpec spec;
  spec.index = std::stoull(text.substr(0, slash));
  spec.total = std::stoull(text.substr(slash + 1));
  if (spec.total == 0 || spec.index >= spec.total) {
    throw CLI::ValidationError("--shard", "index must be below total");
  }
  return spec;
}

int run_construct(const std::string& kind, const std::vector<int>& inputs,
                  const std::string& functional_path, const std::string& box_path) {
  BellFunctional functional;
  Behavior box;
  if (kind == "bipartite") {
    if (inputs.size() != 2) throw std::invalid_argument("bipartite construction needs two inputs");
    functional = build_bipartite(inputs[0], inputs[1]);
    box = modular_box_bipartite(inputs[0], inputs[1], functional.prime);
  } else {
    functional = build_multipartite(inputs);
    box = modular_box_multipartite(inputs, functional.prime);
  }
  save_json(functional_path, functional_to_json(functional));
  save_json(box_path, behavior_to_json(box));
  std::cout << "P = " << functional.prime << "\n";
  std::cout << "penalty = " << functional.penalty << "\n";
  std::cout << "functional: " << functional_path << "\n";
  std::cout << "box: " << box_path << "\n";
  return kExitOk;
}

int run_check_ns(const std::string& behavior_path) {
  const Behavior b = behavior_from_json(load_json(behavior_path));
  const NoSignalingReport report = check_no_signaling(b);
  if (report.passed) {
    std::cout << "no-signaling: PASS (worst violation 0/1)\n";
    return kExitOk;
  }
  std::cout << "no-signaling: FAIL (worst violation " << format_rational(report.worst_violation)
            << ", party " << report.witness->party << ", output " << report.witness->output
            << ")\n";
  return kExitNegative;
}

int run_bell_value(const std::string& functional_path, const std::string& behavior_path,
                   const std::string& eta_text) {
  const BellFunctional f = functional_from_json(load_json(functional_path));
  Behavior b = behavior_from_json(load_json(behavior_path));
  if (!eta_text.empty()) b = apply_loss(b, parse_rational(eta_text));
  const Rational value = evaluate(f, b);
  std::cout << "value = " << format_rational(value) << "\n";
  std::cout << "sign = " << (value > 0 ? "positive" : value < 0 ? "negative" : "zero") << "\n";
  return kExitOk;
}

int run_lhv_max(const std::string& functional_path, std::uint64_t budget,
                const std::string& shard_text, unsigned workers) {
  const BellFunctional f = functional_from_json(load_json(functional_path));
  budget = resolve_budget(budget, kDefaultEnumerationBudget);
  const std::uint64_t outer = outer_iteration_count(f);

  std::uint64_t begin = 0, end = outer;
  if (!shard_text.empty()) {
    const ShardSpec spec = parse_shard(shard_text);
    begin = outer * spec.index / spec.total;
    end = outer * (spec.index + 1) / spec.total;
    std::cout << "shard " << spec.index << "/" << spec.total << " outer range [" << begin << ", "
              << end << ")\n";
  }
  if (begin == end) {
    std::cout << "empty shard\n";
    return kExitOk;
  }

  LhvMaxResult best;
  if (workers <= 1) {
    best = max_bell_value_shard(f, begin, end, budget);
  } else {
    // Deterministic merge: value first, then earliest enumeration position.
    std::vector<LhvMaxResult> parts(workers);
    std::vector<std::thread> pool;
    const std::uint64_t span = end - begin;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = begin + span * w / workers;
        const std::uint64_t hi = begin + span * (w + 1) / workers;
        if (lo < hi) parts[w] = max_bell_value_shard(f, lo, hi, budget);
      });
    }
    for (std::thread& t : pool) t.join();
    bool have = false;
    for (const LhvMaxResult& part : parts) {
      if (part.argmax.responses.empty()) continue;
      if (!have || part.max_value > best.max_value ||
          (part.max_value == best.max_value &&
           strategy_ordinal(part.argmax) < strategy_ordinal(best.argmax))) {
        best = part;
        have = true;
      }
    }
  }

  std::cout << "max = " << format_rational(best.max_value) << "\n";
  std::cout << "strategies scanned = " << best.strategies_scanned.str() << "\n";
  std::cout << "argmax ordinal = " << strategy_ordinal(best.argmax) << "\n";
  print_strategy(best.argmax);
  return kExitOk;
}

int run_local_test(const std::string& behavior_path, const std::string& eta_text,
                   const std::string& out_path, std::uint64_t budget) {
  Behavior b = behavior_from_json(load_json(behavior_path));
  if (!eta_text.empty()) b = apply_loss(b, parse_rational(eta_text));
  const LocalityVerdict verdict = is_local(b, resolve_budget(budget, kDefaultLpColumnBudget));
  if (verdict.feasible()) {
    save_json(out_path, model_to_json(*verdict.model));
    std::cout << "LOCAL: exact model with " << verdict.model->components.size()
              << " components written to " << out_path << "\n";
    return kExitOk;
  }
  save_json(out_path, witness_to_json(*verdict.witness));
  std::cout << "NONLOCAL: separating witness with gap "
            << format_rational(verdict.witness->gap) << " written to " << out_path << "\n";
  return kExitNegative;
}

int run_critical_eta(const std::string& behavior_path, const std::string& tol_text,
                     const std::string& out_path, std::uint64_t budget) {
  const Behavior b = behavior_from_json(load_json(behavior_path));
  const CriticalEta c =
      critical_eta(b, parse_rational(tol_text), resolve_budget(budget, kDefaultLpColumnBudget));
  save_json(out_path, critical_eta_to_json(c));
  std::cout << "bracket [" << format_rational(c.lower) << ", " << format_rational(c.upper)
            << "] width " << format_rational(c.width) << " written to " << out_path << "\n";
  return kExitOk;
}

int run_degrade(const std::string& model_path, const std::string& eta1_text,
                const std::string& eta2_text, const std::string& out_path) {
  const LocalModel m = model_from_json(load_json(model_path));
  const LocalModel degraded = degrade_model(m, parse_rational(eta1_text), parse_rational(eta2_text));
  save_json(out_path, model_to_json(degraded));
  std::cout << "degraded model written to " << out_path << "\n";
  return kExitOk;
}

int run_bounds_table(const std::vector<int>& m_list, int n_max, bool exact) {
  write_bounds_csv(std::cout, bounds_table(m_list, n_max), exact);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detection-efficiency-robust Bell functionals, no-signaling boxes and exact "
               "locality certification"};
  app.require_subcommand(1);

  // construct
  std::string kind;
  std::vector<int> inputs;
  std::string functional_path = "functional.json";
  std::string box_path = "box.json";
  CLI::App* construct = app.add_subcommand(
      "construct", "Build a Bell functional and its matching no-signaling box");
  construct->add_option("kind", kind, "bipartite or multi")
      ->required()
      ->check(CLI::IsMember({"bipartite", "multi"}));
  construct->add_option("--inputs", inputs, "inputs per party, e.g. 2,2")
      ->required()
      ->delimiter(',');
  construct->add_option("--functional", functional_path, "output path for the functional");
  construct->add_option("--box", box_path, "output path for the box behavior");

  // check-ns
  std::string behavior_path;
  CLI::App* check_ns =
      app.add_subcommand("check-ns", "Exact no-signaling check of a behavior file");
  check_ns->add_option("behavior", behavior_path, "behavior JSON file")->required();

  // bell-value
  std::string bv_functional, bv_behavior, bv_eta;
  CLI::App* bell_value = app.add_subcommand("bell-value", "Exact Bell value of a behavior");
  bell_value->add_option("--functional", bv_functional, "functional JSON file")->required();
  bell_value->add_option("--behavior", bv_behavior, "behavior JSON file")->required();
  bell_value->add_option("--eta", bv_eta,
                         "apply the loss channel at this efficiency first (exact rational or "
                         "decimal, e.g. 2/3 or 0.7)");

  // lhv-max
  std::string lm_functional, lm_shard;
  std::uint64_t lm_budget = 0;
  unsigned lm_workers = 1;
  CLI::App* lhv_max = app.add_subcommand(
      "lhv-max", "Exact maximum over deterministic strategies (first maximizer reported)");
  lhv_max->add_option("--functional", lm_functional, "functional JSON file")->required();
  lhv_max->add_option("--budget", lm_budget,
                      "strategy-count budget (default 1e8; BELLBOUND_BUDGET overrides)");
  lhv_max->add_option("--shard", lm_shard, "INDEX/TOTAL partial scan for external merging");
  lhv_max->add_option("--workers", lm_workers, "worker threads (default 1, result independent)");

  // local-test
  std::string lt_behavior, lt_eta, lt_out = "verdict.json";
  std::uint64_t lt_budget = 0;
  CLI::App* local_test = app.add_subcommand(
      "local-test", "Exact LP membership in the local polytope (exit 0 local, 2 nonlocal)");
  local_test->add_option("--behavior", lt_behavior, "behavior JSON file")->required();
  local_test->add_option("--eta", lt_eta, "apply the loss channel first");
  local_test->add_option("--out", lt_out, "verdict output path (model or witness)");
  local_test->add_option("--budget", lt_budget,
                         "LP column budget (default 1e5; BELLBOUND_BUDGET overrides)");

  // critical-eta
  std::string ce_behavior, ce_tol = "1/10000", ce_out = "bracket.json";
  std::uint64_t ce_budget = 0;
  CLI::App* crit = app.add_subcommand(
      "critical-eta", "Bisect the critical detection efficiency of an ideal behavior");
  crit->add_option("--behavior", ce_behavior, "ideal behavior JSON file")->required();
  crit->add_option("--tol", ce_tol, "bracket width tolerance (exact rational, default 1/10000)");
  crit->add_option("--out", ce_out, "bracket output path");
  crit->add_option("--budget", ce_budget, "LP column budget");

  // degrade
  std::string dg_model, dg_eta1, dg_eta2, dg_out = "degraded.json";
  CLI::App* degrade = app.add_subcommand(
      "degrade", "Degrade a local model from efficiency eta2 down to eta1");
  degrade->add_option("--model", dg_model, "local model JSON file")->required();
  degrade->add_option("--eta1", dg_eta1, "target efficiency")->required();
  degrade->add_option("--eta2", dg_eta2, "efficiency the model currently reproduces")->required();
  degrade->add_option("--out", dg_out, "output path");

  // bounds-table
  std::vector<int> bt_m_list = {4, 16, 64, 256};
  int bt_n_max = 200;
  bool bt_exact = false;
  CLI::App* bounds = app.add_subcommand(
      "bounds-table", "CSV comparison of the lower and upper efficiency bounds");
  bounds->add_option("--m-list", bt_m_list, "inputs per party, e.g. 4,16,64,256")->delimiter(',');
  bounds->add_option("--n-max", bt_n_max, "largest number of parties (rows run from N=2)");
  bounds->add_flag("--exact", bt_exact,
                   "render the lower bound as p/q and the upper bound as its exact radicand");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return run_construct(kind, inputs, functional_path, box_path);
    if (check_ns->parsed()) return run_check_ns(behavior_path);
    if (bell_value->parsed()) return run_bell_value(bv_functional, bv_behavior, bv_eta);
    if (lhv_max->parsed()) return run_lhv_max(lm_functional, lm_budget, lm_shard, lm_workers);
    if (local_test->parsed()) return run_local_test(lt_behavior, lt_eta, lt_out, lt_budget);
    if (crit->parsed()) return run_critical_eta(ce_behavior, ce_tol, ce_out, ce_budget);
    if (degrade->parsed()) return run_degrade(dg_model, dg_eta1, dg_eta2, dg_out);
    if (bounds->parsed()) return run_bounds_table(bt_m_list, bt_n_max, bt_exact);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
