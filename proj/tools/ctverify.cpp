// Command-line front end: simulate scenarios, check traces against LTL
// properties, reproduce the scenario verdict table, list pattern templates,
// and plot traces.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ctverify/harness.hpp"
#include "ctverify/ltl/buchi.hpp"
#include "ctverify/ltl/parser.hpp"
#include "ctverify/patterns.hpp"
#include "ctverify/plot.hpp"

namespace {

using namespace ctverify;

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct PropertyArgs {
    std::string ct;
    std::string formula;
    std::vector<std::string> atoms;
    std::string never_claim;
};

void add_property_options(CLI::App* cmd, PropertyArgs& args) {
    auto* ct = cmd->add_option("--ct", args.ct, "Named control-theoretic property (stability)");
    auto* formula = cmd->add_option("--formula", args.formula, "LTL formula, e.g. \"F G ss\"");
    cmd->add_option("--atom", args.atoms, "Atom binding, e.g. \"ss = abs(d_rel - d_safe) <= 1\"");
    cmd->add_option("--never-claim", args.never_claim,
                    "Write the never claim (automaton of the negated formula) to this file");
    ct->excludes(formula);
    formula->excludes(ct);
}

patterns::PropertySpec resolve_property(const PropertyArgs& args) {
    if (!args.ct.empty()) {
        auto spec = patterns::property_by_name(args.ct);
        if (!spec) throw Error(fmt::format("unknown property '{}' (known: stability)", args.ct));
        return *spec;
    }
    if (args.formula.empty()) throw Error("one of --ct or --formula is required");
    patterns::PropertySpec spec;
    spec.name = "custom";
    spec.formula = ltl::parse_formula(args.formula);
    for (const auto& text : args.atoms) spec.atoms.push_back(ltl::parse_atom_binding(text));
    return spec;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(fmt::format("cannot write '{}'", path));
    out << text;
}

void maybe_write_never_claim(const PropertyArgs& args, const patterns::PropertySpec& spec) {
    if (args.never_claim.empty()) return;
    const ltl::Formula negated = ltl::neg(spec.formula);
    write_text(args.never_claim,
               ltl::to_never_claim(ltl::to_buchi(negated), ltl::to_string(negated)));
}

int report_verdict(const ltl::Verdict& v, const harness::Trace& trace,
                   const patterns::PropertySpec& spec) {
    std::cout << fmt::format("property: {} := {}\n", spec.name, ltl::to_string(spec.formula));
    for (const auto& a : spec.atoms) std::cout << fmt::format("  {}\n", ltl::to_string(a));
    if (v.status == ltl::VerdictStatus::InternalError) {
        std::cout << fmt::format("internal-error: {}\n", v.message);
        return kExitInternal;
    }
    std::cout << fmt::format("holds={}\n", v.holds() ? "true" : "false");
    auto time_at = [&](std::size_t i) { return trace.samples.at(i).t; };
    if (v.witness_index) {
        std::cout << fmt::format("witness_index={} (t={} s)\n", *v.witness_index,
                                 time_at(*v.witness_index));
    }
    if (v.counterexample_index) {
        std::cout << fmt::format("counterexample_index={} (t={} s)\n", *v.counterexample_index,
                                 time_at(*v.counterexample_index));
    }
    if (v.convergence_time) std::cout << fmt::format("convergence_time={} s\n", *v.convergence_time);
    if (v.hold_duration) std::cout << fmt::format("hold_duration={} s\n", *v.hold_duration);
    std::cout << fmt::format("collision={}\n", v.collision ? "true" : "false");
    if (!v.message.empty()) std::cout << v.message << '\n';
    return v.holds() ? kExitHolds : kExitViolated;
}

std::vector<std::string> split_columns(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACC simulation and LTL property checking"};
    app.require_subcommand(1);

    std::string scenario;
    std::string out_path;
    auto* simulate = app.add_subcommand("simulate", "Run a scenario and write its trace CSV");
    simulate->add_option("--scenario", scenario, "Bundled scenario name or JSON file")->required();
    simulate->add_option("--out", out_path, "Output CSV (stdout when omitted)");

    std::string trace_path;
    PropertyArgs check_args;
    auto* check = app.add_subcommand("check", "Check a trace CSV against a property");
    check->add_option("--trace", trace_path, "Trace CSV")->required()->check(CLI::ExistingFile);
    add_property_options(check, check_args);

    PropertyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Simulate a scenario and check a property");
    verify->add_option("--scenario", scenario, "Bundled scenario name or JSON file")->required();
    verify->add_option("--out", out_path, "Also write the trace CSV here");
    add_property_options(verify, verify_args);

    std::string scenario_dir;
    auto* report = app.add_subcommand("report", "Reproduce the case1-case3 verdict table");
    report->add_option("--scenario-dir", scenario_dir,
                       "Directory holding case1.json..case3.json (bundled copies by default)")
        ->check(CLI::ExistingDirectory);

    auto* catalog = app.add_subcommand("catalog", "Specification pattern catalog");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "List supported scope x pattern templates");

    std::string columns;
    auto* plot = app.add_subcommand("plot", "Render trace columns as SVG");
    plot->add_option("--trace", trace_path, "Trace CSV")->required()->check(CLI::ExistingFile);
    plot->add_option("--columns", columns, "Comma-separated columns")
        ->default_val("v_ego,v_lead,d_rel,d_safe");
    plot->add_option("--out", out_path, "Output SVG")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*simulate) {
            const auto trace = harness::run_scenario(harness::resolve_scenario(scenario));
            if (out_path.empty()) {
                harness::write_csv(std::cout, trace);
            } else {
                harness::write_csv_file(out_path, trace);
                std::cerr << fmt::format("wrote {} samples to {}{}\n", trace.samples.size(), out_path,
                                         trace.collision ? fmt::format(" (collision at t={} s)",
                                                                       trace.collision->time)
                                                         : "");
            }
            return 0;
        }
        if (*check) {
            const auto spec = resolve_property(check_args);
            maybe_write_never_claim(check_args, spec);
            const auto trace = harness::read_csv_file(trace_path);
            return report_verdict(harness::check_scenario(trace, spec), trace, spec);
        }
        if (*verify) {
            const auto spec = resolve_property(verify_args);
            maybe_write_never_claim(verify_args, spec);
            const auto cfg = harness::resolve_scenario(scenario);
            const auto trace = harness::run_scenario(cfg);
            if (!out_path.empty()) harness::write_csv_file(out_path, trace);
            std::cout << fmt::format("scenario: {} ({} samples, config {})\n", cfg.id,
                                     trace.samples.size(), trace.fingerprint);
            return report_verdict(harness::check_scenario(trace, spec), trace, spec);
        }
        if (*report) {
            harness::Report r;
            if (scenario_dir.empty()) {
                r = harness::reproduce_report();
            } else {
                std::vector<harness::ScenarioConfig> configs;
                for (const auto& g : harness::stability_ground_truth()) {
                    configs.push_back(harness::load_scenario_file(scenario_dir + "/" + g.id + ".json"));
                }
                r = harness::run_cases(configs, harness::stability_ground_truth(),
                                       patterns::build_acc_stability());
            }
            std::cout << harness::format_report(r);
            return r.all_match() ? kExitHolds : kExitViolated;
        }
        if (*catalog) {
            std::cout << fmt::format("{:<10}{:<14}{}\n", "scope", "pattern", "template");
            for (const auto& e : patterns::catalog()) {
                std::cout << fmt::format("{:<10}{:<14}{}\n", patterns::to_string(e.scope),
                                         patterns::to_string(e.kind), e.template_text);
            }
            return 0;
        }
        if (*plot) {
            const auto trace = harness::read_csv_file(trace_path);
            write_text(out_path, plot::render_svg(trace, split_columns(columns)));
            return 0;
        }
    } catch (const ctverify::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
