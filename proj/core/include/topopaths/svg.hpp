#pragma once

#include "topopaths/grid.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace topo {

/// Writes an SVG of the map and paths: unpassable cells as filled squares,
/// one polyline per path cycling a 16-color palette, start as a filled
/// circle and goal as a filled square. Canvas is width x height user units.
void render_svg(const GridMap& map, const std::vector<std::vector<GridCoord>>& paths,
                std::ostream& out);

/// Same, to a file. Throws std::runtime_error when the path is unwritable.
void render_svg(const GridMap& map, const std::vector<std::vector<GridCoord>>& paths,
                const std::string& out_path);

} // namespace topo
