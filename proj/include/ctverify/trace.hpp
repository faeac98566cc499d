#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctverify/ltl/predicate.hpp"

namespace ctverify::harness {

struct Sample {
    double t = 0.0;
    double x_ego = 0.0;
    double v_ego = 0.0;
    double a_ego = 0.0;
    double x_lead = 0.0;
    double v_lead = 0.0;
    double d_rel = 0.0;
    double d_safe = 0.0;
    int mode = 1;  // +1 speed, -1 space
};

struct Collision {
    double time = 0.0;
};

struct Trace {
    std::vector<Sample> samples;
    std::optional<Collision> collision;
    std::string fingerprint;
};

/// Column order of the CSV header and of the table view.
const std::vector<std::string>& trace_columns();

ltl::Table to_table(const Trace& trace);

/// CSV with header `t,x_ego,v_ego,a_ego,x_lead,v_lead,d_rel,d_safe,mode`,
/// shortest round-trip doubles, and an optional `# collision t=<s>` last line.
void write_csv(std::ostream& out, const Trace& trace);
std::string to_csv(const Trace& trace);

/// Throws SchemaError on a malformed file.
Trace read_csv(std::istream& in);
Trace read_csv_file(const std::string& path);
void write_csv_file(const std::string& path, const Trace& trace);

}  // namespace ctverify::harness
