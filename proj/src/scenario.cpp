#include "ctverify/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string_view>
#include <utility>

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::harness {

namespace detail {
// Generated at configure time from scenarios/*.json.
extern const std::vector<std::pair<std::string_view, std::string_view>> kBundledScenarios;
}  // namespace detail

using nlohmann::json;

namespace {

double number(const json& doc, const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    const json& v = doc.at(key);
    if (!v.is_number()) throw SchemaError(fmt::format("'{}' must be a number", key));
    return v.get<double>();
}

control::PidGains gains_from(const json& doc, const control::PidGains& fallback) {
    return {number(doc, "kp", fallback.kp), number(doc, "ki", fallback.ki),
            number(doc, "kd", fallback.kd)};
}

json gains_to(const control::PidGains& g) { return {{"kp", g.kp}, {"ki", g.ki}, {"kd", g.kd}}; }

}  // namespace

void validate(const ScenarioConfig& cfg) {
    if (cfg.id.empty()) throw SchemaError("scenario id must not be empty");
    for (double v : {cfg.v0_ego_kmh, cfg.v0_lead_kmh, cfg.x0_ego, cfg.x0_lead, cfg.dt, cfg.horizon}) {
        if (!std::isfinite(v)) throw SchemaError("scenario values must be finite");
    }
    if (cfg.v0_ego_kmh < 0.0 || cfg.v0_lead_kmh < 0.0) {
        throw SchemaError("initial speeds must be >= 0");
    }
    if (!(cfg.x0_lead > cfg.x0_ego)) {
        throw SchemaError(fmt::format("scenario '{}': x0_lead ({}) must be ahead of x0_ego ({})",
                                      cfg.id, cfg.x0_lead, cfg.x0_ego));
    }
    if (!(cfg.dt > 0.0)) throw SchemaError("dt must be positive");
    if (!(cfg.horizon > 0.0)) throw SchemaError("horizon must be positive");
    plant::validate(cfg.lead_profile);
    control::validate(cfg.controller);
}

ScenarioConfig scenario_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("scenario document must be a JSON object");
    ScenarioConfig cfg;
    try {
        cfg.id = doc.value("id", std::string{});
        cfg.v0_ego_kmh = number(doc, "v0_ego", 0.0);
        cfg.v0_lead_kmh = number(doc, "v0_lead", 0.0);
        cfg.x0_ego = number(doc, "x0_ego", 0.0);
        cfg.x0_lead = number(doc, "x0_lead", 0.0);
        cfg.dt = number(doc, "dt", cfg.dt);
        cfg.horizon = number(doc, "horizon", cfg.horizon);

        cfg.lead_profile = plant::ConstantSpeed{kmh_to_ms(cfg.v0_lead_kmh)};
        if (doc.contains("lead_profile")) {
            const json& lp = doc.at("lead_profile");
            const std::string type = lp.value("type", std::string{"constant"});
            const double v0 = number(lp, "v0", kmh_to_ms(cfg.v0_lead_kmh));
            if (type == "constant") {
                cfg.lead_profile = plant::ConstantSpeed{v0};
            } else if (type == "sine") {
                cfg.lead_profile = plant::SineSpeed{v0, number(lp, "amplitude", 0.0),
                                                    number(lp, "angular_frequency", 0.0)};
            } else {
                throw SchemaError(fmt::format("unknown lead profile type '{}'", type));
            }
        }

        control::ControllerConfig& c = cfg.controller;
        c.v_set = kmh_to_ms(cfg.v0_ego_kmh);
        if (doc.contains("v_set_kmh")) c.v_set = kmh_to_ms(number(doc, "v_set_kmh", 0.0));
        if (doc.contains("v_set")) c.v_set = number(doc, "v_set", c.v_set);
        if (doc.contains("controller")) {
            const json& cj = doc.at("controller");
            c.d_default = number(cj, "d_default", c.d_default);
            c.t_gap = number(cj, "t_gap", c.t_gap);
            if (cj.contains("speed_pid")) c.speed_pid = gains_from(cj.at("speed_pid"), c.speed_pid);
            if (cj.contains("space_pid")) c.space_pid = gains_from(cj.at("space_pid"), c.space_pid);
            c.windup_limit = number(cj, "windup_limit", c.windup_limit);
            c.a_min = number(cj, "a_min", c.a_min);
            c.a_max = number(cj, "a_max", c.a_max);
            if (cj.contains("mode_rule")) {
                c.mode_rule = control::parse_mode_rule(cj.at("mode_rule").get<std::string>());
            }
        }
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("malformed scenario: {}", e.what()));
    }
    validate(cfg);
    return cfg;
}

json scenario_to_json(const ScenarioConfig& cfg) {
    json lead;
    if (const auto* s = std::get_if<plant::SineSpeed>(&cfg.lead_profile)) {
        lead = {{"type", "sine"},
                {"v0", s->v0},
                {"amplitude", s->amplitude},
                {"angular_frequency", s->angular_frequency}};
    } else {
        lead = {{"type", "constant"}, {"v0", std::get<plant::ConstantSpeed>(cfg.lead_profile).v0}};
    }
    const control::ControllerConfig& c = cfg.controller;
    return {
        {"id", cfg.id},
        {"v0_ego", cfg.v0_ego_kmh},
        {"v0_lead", cfg.v0_lead_kmh},
        {"x0_ego", cfg.x0_ego},
        {"x0_lead", cfg.x0_lead},
        {"v_set", c.v_set},
        {"lead_profile", lead},
        {"dt", cfg.dt},
        {"horizon", cfg.horizon},
        {"controller",
         {{"d_default", c.d_default},
          {"t_gap", c.t_gap},
          {"speed_pid", gains_to(c.speed_pid)},
          {"space_pid", gains_to(c.space_pid)},
          {"windup_limit", c.windup_limit},
          {"a_min", c.a_min},
          {"a_max", c.a_max},
          {"mode_rule", std::string(control::to_string(c.mode_rule))}}},
    };
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(fmt::format("cannot open scenario file '{}'", path));
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("{}: {}", path, e.what()));
    }
    return scenario_from_json(doc);
}

std::vector<std::string> bundled_scenario_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : detail::kBundledScenarios) out.emplace_back(name);
    return out;
}

ScenarioConfig resolve_scenario(const std::string& name_or_path) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(name_or_path, ec)) return load_scenario_file(name_or_path);
    for (const auto& [name, text] : detail::kBundledScenarios) {
        if (name == name_or_path) return scenario_from_json(json::parse(text));
    }
    throw SchemaError(fmt::format("no scenario file or bundled scenario named '{}'", name_or_path));
}

std::string fingerprint(const ScenarioConfig& cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : scenario_to_json(cfg).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
}

}  // namespace ctverify::harness
