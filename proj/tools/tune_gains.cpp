// Grid search over the two PID gain sets. For every candidate it runs the
// bundled scenarios and reports whether the case1..case3 stability verdicts
// match, the final stability margin of case2 and the mode switches of the
// sine scenario. Candidates are printed best first.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ctverify/harness.hpp"

namespace {

using namespace ctverify;

struct Candidate {
    control::PidGains speed;
    control::PidGains space;
    int matches = 0;
    double case2_margin = 0.0;  // min over the last 10 s of d_rel - 1.05 d_safe
    double case2_converged = -1.0;
    int fig1_switches = 0;
    bool fig1_collision = false;
};

int count_switches(const harness::Trace& trace) {
    int n = 0;
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        if (trace.samples[i].mode != trace.samples[i - 1].mode) ++n;
    }
    return n;
}

double tail_margin(const harness::Trace& trace, double window) {
    double m = 1e300;
    const double t_end = trace.samples.back().t;
    for (const auto& s : trace.samples) {
        if (s.t >= t_end - window) m = std::min(m, s.d_rel - 1.05 * s.d_safe);
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PID gain sweep for the bundled scenarios"};
    std::size_t top = 15;
    app.add_option("--top", top, "Number of candidates to print");
    CLI11_PARSE(app, argc, argv);

    const auto spec = patterns::build_acc_stability();
    std::vector<harness::ScenarioConfig> base;
    for (const auto& name : {"case1", "case2", "case3", "fig1_sine"}) {
        base.push_back(harness::resolve_scenario(name));
    }

    const std::vector<double> kps{0.3, 0.5, 0.8};
    const std::vector<double> speed_kis{0.0, 0.02, 0.1};
    const std::vector<double> space_kis{0.0, 0.02, 0.1};
    const std::vector<double> kds{0.0, 0.4, 1.0};

    std::vector<Candidate> results;
    for (double skp : kps)
        for (double ski : speed_kis)
            for (double dkp : kps)
                for (double dki : space_kis)
                    for (double dkd : kds) {
                        Candidate c{{skp, ski, 0.0}, {dkp, dki, dkd}};
                        for (auto cfg : base) {
                            cfg.controller.speed_pid = c.speed;
                            cfg.controller.space_pid = c.space;
                            const auto trace = harness::run_scenario(cfg);
                            if (cfg.id == "fig1_sine") {
                                c.fig1_switches = count_switches(trace);
                                c.fig1_collision = trace.collision.has_value();
                                continue;
                            }
                            const auto v = harness::check_scenario(trace, spec);
                            const bool expected = cfg.id != "case3";
                            if (v.holds() == expected) ++c.matches;
                            if (cfg.id == "case2") {
                                c.case2_margin = tail_margin(trace, 10.0);
                                if (v.convergence_time) c.case2_converged = *v.convergence_time;
                            }
                        }
                        results.push_back(c);
                    }

    std::sort(results.begin(), results.end(), [](const Candidate& a, const Candidate& b) {
        if (a.matches != b.matches) return a.matches > b.matches;
        return a.case2_margin > b.case2_margin;
    });

    std::cout << fmt::format("{:<20}{:<20}{:<8}{:<14}{:<12}{}\n", "speed kp/ki", "space kp/ki/kd",
                             "match", "case2 margin", "case2 conv", "fig1 switches");
    for (std::size_t i = 0; i < std::min(top, results.size()); ++i) {
        const auto& c = results[i];
        std::cout << fmt::format("{:<20}{:<20}{:<8}{:<14.3f}{:<12.1f}{}{}\n",
                                 fmt::format("{}/{}", c.speed.kp, c.speed.ki),
                                 fmt::format("{}/{}/{}", c.space.kp, c.space.ki, c.space.kd),
                                 fmt::format("{}/3", c.matches), c.case2_margin, c.case2_converged,
                                 c.fig1_switches, c.fig1_collision ? " collision" : "");
    }
    return 0;
}
