#pragma once

#include <string>

#include "treemate/map.hpp"
#include "treemate/mating.hpp"

namespace treemate {

/// Schematic SVG of the rectangle diagram: the two projection paths drawn
/// vertically (red left, blue right), one rung per level, oblique cells
/// shaded. Deterministic output.
std::string render_diagram_svg(const MatingDiagram& d);

/// Graphviz text for a decorated map; directed when an orientation is
/// present, tree edges bold, colored edges colored.
std::string render_map_dot(const DecoratedMap& dm, const std::string& name = "map");

} // namespace treemate
