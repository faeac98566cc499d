#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ctverify/controller.hpp"
#include "ctverify/plant.hpp"

namespace ctverify::harness {

inline constexpr double kmh_to_ms(double kmh) { return kmh / 3.6; }

struct ScenarioConfig {
    std::string id;
    double v0_ego_kmh = 0.0;
    double v0_lead_kmh = 0.0;
    double x0_ego = 0.0;
    double x0_lead = 0.0;
    plant::LeadProfile lead_profile = plant::ConstantSpeed{};
    double dt = 0.1;
    double horizon = 45.0;
    control::ControllerConfig controller;
};

/// Throws SchemaError on an invalid configuration.
void validate(const ScenarioConfig& cfg);

/// Parses a scenario document. Speeds v0_ego and v0_lead are km/h. The set
/// speed is `v_set` (m/s) or `v_set_kmh`; it defaults to the initial ego speed.
/// The lead profile defaults to a constant speed of v0_lead.
ScenarioConfig scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const ScenarioConfig& cfg);

ScenarioConfig load_scenario_file(const std::string& path);

/// Names of the scenarios compiled into the library: case1, case2, case3, fig1_sine.
std::vector<std::string> bundled_scenario_names();

/// Resolves `name_or_path`: an existing file is loaded from disk, otherwise
/// the bundled scenario of that name is used. Throws SchemaError if neither exists.
ScenarioConfig resolve_scenario(const std::string& name_or_path);

/// FNV-1a over the canonical JSON dump, as 16 hex digits.
std::string fingerprint(const ScenarioConfig& cfg);

}  // namespace ctverify::harness
