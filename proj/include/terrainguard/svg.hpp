#pragma once

#include <string>

#include "terrainguard/solvers.hpp"

namespace terrainguard {

// Standalone SVG document: terrain polyline, points, guards colored by
// direction, picked guards emphasized; continuous instances additionally show
// essential-segment breakpoints and representatives. Coordinates are
// converted to floating point here and only here.
std::string render_svg(const GuardingInstance& instance, const Solution* solution = nullptr);

}  // namespace terrainguard
