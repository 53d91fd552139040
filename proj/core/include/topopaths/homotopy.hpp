#pragma once

#include "topopaths/grid.hpp"

#include <vector>

namespace topo {

/// 4-connected component of unpassable cells. The representative is the
/// center of the member cell nearest the component centroid, so it always
/// lies strictly inside the obstacle.
struct ObstacleComponent {
    int id = 0;
    std::vector<GridCoord> cells;
    double rep_x = 0.0;
    double rep_y = 0.0;
};

std::vector<ObstacleComponent> find_obstacle_components(const GridMap& map);

/// Integer winding numbers of a closed polyline around each component
/// representative, in component order.
struct WindingSignature {
    std::vector<int> values;

    friend bool operator==(const WindingSignature&, const WindingSignature&) = default;
};

enum class HomotopyVerdict {
    same,         // every winding number of the joined loop is zero
    distinct,     // some component is wound a nonzero number of times
    inconclusive, // a representative stayed on the loop after perturbation
};

/// Winding number of the closed polyline around (px, py) by signed-angle
/// summation. Returns false on failure: the point lies on a loop segment.
bool winding_number(const std::vector<GridCoord>& loop, double px, double py, int& out);

/// Signature of the closed polyline (last vertex implicitly joined to the
/// first) against a set of obstacle components.
WindingSignature winding_signature(const std::vector<GridCoord>& loop,
                                   const std::vector<ObstacleComponent>& components);

/// Whether two collision-free paths sharing endpoints belong to different
/// homotopy classes: joins p1 with reversed p2 and tests the loop's winding
/// numbers. A representative that lies on the loop is nudged toward its
/// component centroid before the oracle gives up.
HomotopyVerdict homotopy_distinct(const GridMap& map, const std::vector<GridCoord>& p1,
                                  const std::vector<GridCoord>& p2);

} // namespace topo
