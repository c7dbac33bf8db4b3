#pragma once

#include <string>

#include "kbst/solver.hpp"

namespace kbst {

// Deterministic SVG rendering of a solved instance: terminals as filled
// circles, unused candidates as hollow circles, chosen Steiner points as
// filled squares, tree edges as lines with the bottleneck edge highlighted.
// The viewBox fits every point with a 5% margin.
std::string render_svg(const Instance& inst, const SteinerTree& tree);

}  // namespace kbst
