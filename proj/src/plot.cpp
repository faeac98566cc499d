#include "ctverify/plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ctverify/error.hpp"

namespace ctverify::plot {

namespace {

constexpr double kPanelWidth = 460.0;
constexpr double kPanelHeight = 320.0;
constexpr double kMarginLeft = 62.0;
constexpr double kMarginRight = 18.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 44.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Panel {
    std::string title;
    std::vector<std::size_t> columns;
};

std::string panel_group(const std::string& column) {
    if (column.starts_with("v_") || column.starts_with("a_")) return "speed / acceleration";
    if (column.starts_with("d_") || column.starts_with("x_")) return "distance (m)";
    return column;
}

double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) return m * mag;
    }
    return 10.0 * mag;
}

std::vector<double> ticks(double lo, double hi) {
    std::vector<double> out;
    const double step = nice_step(hi - lo, 5);
    for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
        out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
    }
    return out;
}

}  // namespace

std::string render_svg(const harness::Trace& trace, const std::vector<std::string>& columns) {
    if (columns.empty()) throw SchemaError("no columns selected for plotting");
    if (trace.samples.empty()) throw SchemaError("cannot plot an empty trace");
    const ltl::Table table = harness::to_table(trace);
    const std::size_t t_col = 0;

    std::vector<Panel> panels;
    for (const auto& name : columns) {
        auto idx = table.column_index(name);
        if (!idx || name == "t") throw SchemaError(fmt::format("cannot plot column '{}'", name));
        const std::string group = panel_group(name);
        auto it = std::find_if(panels.begin(), panels.end(),
                               [&](const Panel& p) { return p.title == group; });
        if (it == panels.end()) {
            panels.push_back({group, {*idx}});
        } else {
            it->columns.push_back(*idx);
        }
    }

    std::vector<double> switches;
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        if (trace.samples[i].mode != trace.samples[i - 1].mode) switches.push_back(trace.samples[i].t);
    }

    const double t_lo = trace.samples.front().t;
    const double t_hi = std::max(trace.samples.back().t, t_lo + 1e-9);
    const double width = kPanelWidth * static_cast<double>(panels.size());

    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"11\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        width, kPanelHeight, width, kPanelHeight);

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const Panel& panel = panels[p];
        const double x0 = kPanelWidth * static_cast<double>(p) + kMarginLeft;
        const double x1 = kPanelWidth * static_cast<double>(p + 1) - kMarginRight;
        const double y0 = kMarginTop;
        const double y1 = kPanelHeight - kMarginBottom;

        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& row : table.rows) {
            for (std::size_t c : panel.columns) {
                lo = std::min(lo, row[c]);
                hi = std::max(hi, row[c]);
            }
        }
        if (hi - lo < 1e-9) {
            lo -= 1.0;
            hi += 1.0;
        }
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;

        auto sx = [&](double t) { return x0 + (t - t_lo) / (t_hi - t_lo) * (x1 - x0); };
        auto sy = [&](double v) { return y1 - (v - lo) / (hi - lo) * (y1 - y0); };

        svg += fmt::format("<g id=\"panel{}\">\n", p);
        svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
                           (x0 + x1) / 2, y0 - 14, panel.title);
        svg += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
                           "fill=\"none\" stroke=\"#444\"/>\n",
                           x0, y0, x1 - x0, y1 - y0);
        for (double v : ticks(t_lo, t_hi)) {
            svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#444\"/>"
                               "<text x=\"{0:.2f}\" y=\"{3:.2f}\" text-anchor=\"middle\">{4:g}</text>\n",
                               sx(v), y1, y1 + 4, y1 + 16, v);
        }
        for (double v : ticks(lo, hi)) {
            svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#444\"/>"
                               "<text x=\"{3:.2f}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:g}</text>\n",
                               x0 - 4, sy(v), x0, x0 - 6, sy(v) + 4, v);
        }
        svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">t (s)</text>\n",
                           (x0 + x1) / 2, y1 + 32);

        for (double t : switches) {
            svg += fmt::format("<line class=\"mode-switch\" x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" "
                               "y2=\"{2:.2f}\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n",
                               sx(t), y0, y1);
        }

        for (std::size_t k = 0; k < panel.columns.size(); ++k) {
            const std::size_t c = panel.columns[k];
            const char* color = kPalette[k % std::size(kPalette)];
            svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", color);
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                if (i > 0) svg += ' ';
                svg += fmt::format("{:.2f},{:.2f}", sx(table.rows[i][t_col]), sy(table.rows[i][c]));
            }
            svg += "\"/>\n";
            const double ly = y0 + 14 + 14 * static_cast<double>(k);
            svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"{3}\" "
                               "stroke-width=\"2\"/><text x=\"{4:.2f}\" y=\"{5:.2f}\">{6}</text>\n",
                               x1 - 90, ly, x1 - 72, color, x1 - 68, ly + 4, table.columns[c]);
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace ctverify::plot
