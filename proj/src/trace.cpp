#include "ctverify/trace.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::harness {

const std::vector<std::string>& trace_columns() {
    static const std::vector<std::string> columns{"t",      "x_ego", "v_ego",  "a_ego", "x_lead",
                                                  "v_lead", "d_rel", "d_safe", "mode"};
    return columns;
}

ltl::Table to_table(const Trace& trace) {
    ltl::Table table;
    table.columns = trace_columns();
    table.rows.reserve(trace.samples.size());
    for (const Sample& s : trace.samples) {
        table.rows.push_back({s.t, s.x_ego, s.v_ego, s.a_ego, s.x_lead, s.v_lead, s.d_rel,
                              s.d_safe, static_cast<double>(s.mode)});
    }
    return table;
}

void write_csv(std::ostream& out, const Trace& trace) {
    std::string buf = "t,x_ego,v_ego,a_ego,x_lead,v_lead,d_rel,d_safe,mode\n";
    for (const Sample& s : trace.samples) {
        fmt::format_to(std::back_inserter(buf), "{},{},{},{},{},{},{},{},{}\n", s.t, s.x_ego,
                       s.v_ego, s.a_ego, s.x_lead, s.v_lead, s.d_rel, s.d_safe, s.mode);
    }
    if (trace.collision) fmt::format_to(std::back_inserter(buf), "# collision t={}\n", trace.collision->time);
    out << buf;
}

std::string to_csv(const Trace& trace) {
    std::ostringstream out;
    write_csv(out, trace);
    return out.str();
}

namespace {

double parse_double(std::string_view field, std::size_t line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw SchemaError(fmt::format("trace line {}: '{}' is not a number", line, field));
    }
    return value;
}

}  // namespace

Trace read_csv(std::istream& in) {
    Trace trace;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            constexpr std::string_view kCollision = "# collision t=";
            if (std::string_view(line).starts_with(kCollision)) {
                trace.collision = Collision{
                    parse_double(std::string_view(line).substr(kCollision.size()), line_no)};
            }
            continue;
        }
        if (!header_seen) {
            if (line != "t,x_ego,v_ego,a_ego,x_lead,v_lead,d_rel,d_safe,mode") {
                throw SchemaError(fmt::format("trace line {}: unexpected header '{}'", line_no, line));
            }
            header_seen = true;
            continue;
        }
        if (trace.collision) {
            throw SchemaError(fmt::format("trace line {}: sample after collision marker", line_no));
        }
        std::vector<double> fields;
        std::string_view rest(line);
        for (;;) {
            const auto comma = rest.find(',');
            fields.push_back(parse_double(rest.substr(0, comma), line_no));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != 9) {
            throw SchemaError(fmt::format("trace line {}: expected 9 fields, got {}", line_no, fields.size()));
        }
        Sample s{fields[0], fields[1], fields[2], fields[3], fields[4],
                 fields[5], fields[6], fields[7], static_cast<int>(fields[8])};
        if (s.mode != 1 && s.mode != -1) {
            throw SchemaError(fmt::format("trace line {}: mode must be 1 or -1", line_no));
        }
        trace.samples.push_back(s);
    }
    if (!header_seen) throw SchemaError("trace has no header");
    return trace;
}

Trace read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(fmt::format("cannot open trace file '{}'", path));
    return read_csv(in);
}

void write_csv_file(const std::string& path, const Trace& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError(fmt::format("cannot write trace file '{}'", path));
    write_csv(out, trace);
}

}  // namespace ctverify::harness
