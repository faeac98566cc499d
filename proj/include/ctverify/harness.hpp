#pragma once

#include <string>
#include <vector>

#include "ctverify/ltl/check.hpp"
#include "ctverify/patterns.hpp"
#include "ctverify/scenario.hpp"
#include "ctverify/trace.hpp"

namespace ctverify::harness {

/// Closed-loop simulation sampled every dt up to the horizon. Stops at the
/// first sample with d_rel <= 0 and records it as the collision. The result is
/// a pure function of the configuration.
Trace run_scenario(const ScenarioConfig& cfg);

/// A collision makes the property false at the collision sample; otherwise
/// the property formula is checked on the trace.
ltl::Verdict check_scenario(const Trace& trace, const patterns::PropertySpec& spec);

struct CaseResult {
    std::string id;
    bool expected = false;
    ltl::Verdict verdict;
    std::size_t samples = 0;

    bool matches() const {
        return verdict.status != ltl::VerdictStatus::InternalError && verdict.holds() == expected;
    }
};

struct Report {
    std::vector<CaseResult> cases;
    double wall_seconds = 0.0;

    bool all_match() const;
};

/// Expected stability verdicts for the three following scenarios.
struct GroundTruth {
    std::string id;
    bool holds;
};
const std::vector<GroundTruth>& stability_ground_truth();

/// Runs the listed scenarios concurrently and merges results in list order.
Report run_cases(const std::vector<ScenarioConfig>& configs,
                 const std::vector<GroundTruth>& truth, const patterns::PropertySpec& spec);

/// case1..case3 with the bundled configuration against the ACC stability property.
Report reproduce_report();

std::string format_report(const Report& report);

}  // namespace ctverify::harness
