#pragma once

#include <string>
#include <vector>

#include "ctverify/trace.hpp"

namespace ctverify::plot {

/// Renders the selected columns against time as SVG. Speed and acceleration
/// columns share one panel, distance and position columns another, so a
/// selection like v_ego,v_lead,d_rel,d_safe gives a two-panel figure. Mode
/// changes are drawn as dashed vertical markers on every panel.
/// Throws SchemaError on an unknown column or an empty selection.
std::string render_svg(const harness::Trace& trace, const std::vector<std::string>& columns);

}  // namespace ctverify::plot
