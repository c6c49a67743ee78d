#include "bellbound/json_io.hpp"

#include <fstream>

#include "bellbound/errors.hpp"

namespace bellbound {

namespace {

std::vector<Rational> rational_array(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<Rational> values;
  values.reserve(j.size());
  for (const auto& entry : j) {
    values.push_back(parse_rational(entry.get<std::string>()));
  }
  return values;
}

nlohmann::json rational_array_json(const std::vector<Rational>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& v : values) out.push_back(format_rational(v));
  return out;
}

}  // namespace

nlohmann::json scenario_to_json(const Scenario& s) {
  return {{"parties", s.num_parties}, {"inputs", s.inputs_per_party}, {"outputs", s.num_outputs}};
}

Scenario scenario_from_json(const nlohmann::json& j) {
  return Scenario(j.at("parties").get<int>(), j.at("inputs").get<std::vector<int>>(),
                  j.at("outputs").get<int>());
}

nlohmann::json behavior_to_json(const Behavior& b) {
  return {{"scenario", scenario_to_json(b.scenario)}, {"table", rational_array_json(b.table)}};
}

Behavior behavior_from_json(const nlohmann::json& j) {
  Behavior b(scenario_from_json(j.at("scenario")), rational_array(j.at("table"), "table"));
  b.validate();
  return b;
}

nlohmann::json functional_to_json(const BellFunctional& f) {
  nlohmann::json marginals = nlohmann::json::array();
  for (const auto& per_party : f.marginals) marginals.push_back(per_party);
  return {{"scenario", scenario_to_json(f.scenario)},
          {"prime", f.prime},
          {"penalty", f.penalty},
          {"joint", f.joint},
          {"marginals", marginals}};
}

BellFunctional functional_from_json(const nlohmann::json& j) {
  BellFunctional f;
  f.scenario = scenario_from_json(j.at("scenario"));
  f.prime = j.at("prime").get<int>();
  f.penalty = j.at("penalty").get<long long>();
  f.joint = j.at("joint").get<std::vector<long long>>();
  f.marginals = j.at("marginals").get<std::vector<std::vector<long long>>>();

  if (f.prime != f.scenario.num_outputs) {
    throw ValidationError("functional prime must equal the scenario's output count");
  }
  if (f.penalty <= 0) throw ValidationError("penalty must be positive");
  if (f.joint.size() != f.joint_size()) {
    throw ValidationError("joint coefficient array has the wrong size");
  }
  if (static_cast<int>(f.marginals.size()) != f.scenario.num_parties) {
    throw ValidationError("marginal coefficient arrays do not match the number of parties");
  }
  for (int i = 0; i < f.scenario.num_parties; ++i) {
    const std::size_t expected =
        static_cast<std::size_t>(f.scenario.inputs_per_party[i]) * static_cast<std::size_t>(f.prime);
    if (f.marginals[i].size() != expected) {
      throw ValidationError("marginal coefficients of party " + std::to_string(i + 1) +
                            " have the wrong size");
    }
  }
  return f;
}

nlohmann::json model_to_json(const LocalModel& m) {
  nlohmann::json components = nlohmann::json::array();
  for (const LocalModelComponent& c : m.components) {
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& party_table : c.tables) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : party_table) rows.push_back(rational_array_json(row));
      tables.push_back(rows);
    }
    components.push_back({{"weight", format_rational(c.weight)}, {"tables", tables}});
  }
  return {{"scenario", scenario_to_json(m.scenario)}, {"components", components}};
}

LocalModel model_from_json(const nlohmann::json& j) {
  LocalModel m;
  m.scenario = scenario_from_json(j.at("scenario"));
  for (const auto& cj : j.at("components")) {
    LocalModelComponent c;
    c.weight = parse_rational(cj.at("weight").get<std::string>());
    for (const auto& party_table : cj.at("tables")) {
      std::vector<std::vector<Rational>> rows;
      for (const auto& row : party_table) rows.push_back(rational_array(row, "response row"));
      c.tables.push_back(std::move(rows));
    }
    m.components.push_back(std::move(c));
  }
  m.validate();
  return m;
}

nlohmann::json witness_to_json(const SeparatingWitness& w) {
  return {{"coeffs", rational_array_json(w.coeffs)}, {"gap", format_rational(w.gap)}};
}

SeparatingWitness witness_from_json(const nlohmann::json& j) {
  SeparatingWitness w;
  w.coeffs = rational_array(j.at("coeffs"), "coeffs");
  w.gap = parse_rational(j.at("gap").get<std::string>());
  return w;
}

nlohmann::json report_to_json(const NoSignalingReport& r) {
  nlohmann::json out = {{"passed", r.passed},
                        {"worst_violation", format_rational(r.worst_violation)}};
  if (r.witness) {
    out["witness"] = {{"party", r.witness->party},
                      {"output", r.witness->output},
                      {"inputs_a", r.witness->inputs_a},
                      {"inputs_b", r.witness->inputs_b}};
  }
  return out;
}

nlohmann::json critical_eta_to_json(const CriticalEta& c) {
  nlohmann::json out = {{"lower", format_rational(c.lower)},
                        {"upper", format_rational(c.upper)},
                        {"width", format_rational(c.width)}};
  out["lower_model"] = c.lower_model ? model_to_json(*c.lower_model) : nlohmann::json();
  out["upper_witness"] = c.upper_witness ? witness_to_json(*c.upper_witness) : nlohmann::json();
  return out;
}

void save_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << "\n";
}

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return nlohmann::json::parse(in);
}

}  // namespace bellbound
