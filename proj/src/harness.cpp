#include "ctverify/harness.hpp"

#include <chrono>
#include <cmath>
#include <future>

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::harness {

Trace run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    const control::ControllerConfig& ctl = cfg.controller;

    plant::VehicleState ego{cfg.x0_ego, kmh_to_ms(cfg.v0_ego_kmh), 0.0};
    plant::VehicleState lead{cfg.x0_lead, plant::profile_speed(cfg.lead_profile, 0.0), 0.0};
    control::ControllerState state;

    Trace trace;
    trace.fingerprint = fingerprint(cfg);
    const auto steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
    trace.samples.reserve(steps + 1);

    for (std::size_t k = 0;; ++k) {
        // Grid times are k*dt rather than accumulated sums.
        const double t = static_cast<double>(k) * cfg.dt;
        const auto out = control::controller_step(ctl, state, {ego.x, ego.v, lead.x}, cfg.dt);
        state = out.state;
        trace.samples.push_back(Sample{t, ego.x, ego.v, out.a_cmd, lead.x, lead.v, out.d_rel,
                                       out.d_safe, control::signal(out.mode)});
        if (k == steps) break;

        ego = plant::step_ego(ego, out.a_cmd, cfg.dt);
        lead = plant::step_lead(t, cfg.lead_profile, lead, cfg.dt);

        const double d_rel = control::relative_distance(lead.x, ego.x);
        if (d_rel <= 0.0) {
            const double t_hit = static_cast<double>(k + 1) * cfg.dt;
            trace.samples.push_back(Sample{t_hit, ego.x, ego.v, out.a_cmd, lead.x, lead.v, d_rel,
                                           control::safe_distance(ego.v, ctl),
                                           control::signal(out.mode)});
            trace.collision = Collision{t_hit};
            break;
        }
    }
    return trace;
}

ltl::Verdict check_scenario(const Trace& trace, const patterns::PropertySpec& spec) {
    for (const auto& p : spec.atoms) p.validate(trace_columns());
    if (trace.samples.empty()) throw SchemaError("cannot check an empty trace");

    ltl::Verdict v;
    if (trace.collision) {
        v.status = ltl::VerdictStatus::Violated;
        v.counterexample_index = trace.samples.size() - 1;
        v.collision = true;
        v.message = fmt::format("collision at t={} s", trace.collision->time);
        return v;
    }
    v = ltl::check_trace(spec.formula, to_table(trace), spec.atoms);
    if (v.witness_index) {
        const double t0 = trace.samples[*v.witness_index].t;
        v.convergence_time = t0;
        v.hold_duration = trace.samples.back().t - t0;
    }
    return v;
}

bool Report::all_match() const {
    if (cases.empty()) return false;
    for (const auto& c : cases) {
        if (!c.matches()) return false;
    }
    return true;
}

const std::vector<GroundTruth>& stability_ground_truth() {
    static const std::vector<GroundTruth> truth{
        {"case1", true}, {"case2", true}, {"case3", false}};
    return truth;
}

Report run_cases(const std::vector<ScenarioConfig>& configs, const std::vector<GroundTruth>& truth,
                 const patterns::PropertySpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::future<CaseResult>> jobs;
    jobs.reserve(configs.size());
    for (const auto& cfg : configs) {
        bool expected = false;
        bool known = false;
        for (const auto& g : truth) {
            if (g.id == cfg.id) {
                expected = g.holds;
                known = true;
            }
        }
        if (!known) throw SchemaError(fmt::format("no ground truth for scenario '{}'", cfg.id));
        jobs.push_back(std::async(std::launch::async, [&cfg, expected, &spec] {
            const Trace trace = run_scenario(cfg);
            return CaseResult{cfg.id, expected, check_scenario(trace, spec), trace.samples.size()};
        }));
    }
    Report report;
    for (auto& job : jobs) report.cases.push_back(job.get());
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Report reproduce_report() {
    std::vector<ScenarioConfig> configs;
    for (const auto& g : stability_ground_truth()) configs.push_back(resolve_scenario(g.id));
    return run_cases(configs, stability_ground_truth(), patterns::build_acc_stability());
}

std::string format_report(const Report& report) {
    std::string out = fmt::format("{:<8}{:<10}{:<16}{:<7}{:<12}{}\n", "case", "expected", "result",
                                  "match", "converged", "notes");
    std::size_t matched = 0;
    for (const auto& c : report.cases) {
        const std::string result = c.verdict.status == ltl::VerdictStatus::InternalError
                                       ? "internal-error"
                                       : (c.verdict.holds() ? "true" : "false");
        const std::string converged =
            c.verdict.convergence_time ? fmt::format("{:.1f} s", *c.verdict.convergence_time) : "-";
        std::string notes = c.verdict.message;
        if (notes.empty()) notes = fmt::format("{} samples", c.samples);
        out += fmt::format("{:<8}{:<10}{:<16}{:<7}{:<12}{}\n", c.id, c.expected ? "true" : "false",
                           result, c.matches() ? "yes" : "NO", converged, notes);
        if (c.matches()) ++matched;
    }
    out += fmt::format("{}/{} verdicts match ({:.3f} s)\n", matched, report.cases.size(),
                       report.wall_seconds);
    return out;
}

}  // namespace ctverify::harness
