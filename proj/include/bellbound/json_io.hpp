#pragma once

#include <filesystem>
#include <json.hpp>

#include "bellbound/behavior.hpp"
#include "bellbound/inequality.hpp"
#include "bellbound/local_polytope.hpp"
#include "bellbound/strategies.hpp"

namespace bellbound {

// File schemas. Rationals travel as strings "p/q" in lowest terms and all
// arrays follow the dense index order of the in-memory types, so a
// save/load round trip is bit-exact.

nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const nlohmann::json& j);

nlohmann::json functional_to_json(const BellFunctional& f);
BellFunctional functional_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const LocalModel& m);
LocalModel model_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const SeparatingWitness& w);
SeparatingWitness witness_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const NoSignalingReport& r);
nlohmann::json critical_eta_to_json(const CriticalEta& c);

void save_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace bellbound
