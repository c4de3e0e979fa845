#pragma once

#include <span>
#include <string>

#include "hubsim/stats.hpp"

namespace hubsim
{

/// Two stacked SVG panels over a log2 N axis: (a) teleportation success rate,
/// (b) average entanglement attempts per teleportation. One polyline per
/// (policy, source); simulated series are solid, analytic ones dashed.
/// Throws std::invalid_argument when both inputs are empty.
std::string render_chart(std::span<const PointSummary> summaries, std::span<const AnalyticPoint> analytic = {});

/// render_chart written to `path`; throws IoError naming the path.
void emit_chart(const std::string& path, std::span<const PointSummary> summaries,
                std::span<const AnalyticPoint> analytic = {});

} // namespace hubsim
