#pragma once

#include <iosfwd>
#include <string>

#include "twoatom/sweep.hpp"

namespace twoatom {

enum class PlotStyle { polar, cartesian };

// Self-contained 800x600 SVG with labeled axes, one polyline per value
// column and a legend.  Output is byte-for-byte deterministic for a fixed
// input.  Polar style requires a theta axis; needs at least two rows.
void render_svg(const SweepResult& result, PlotStyle style, std::ostream& out);
void render_svg(const SweepResult& result, PlotStyle style,
                const std::string& path);

}  // namespace twoatom
