#pragma once

#include "topopaths/grid.hpp"

namespace topo::testing {

/// 8x8 map with one 2x2 obstacle block at (3,3)-(4,4).
inline GridMap two_by_two_fixture() {
    GridMap map(8, 8);
    for (int y = 3; y <= 4; ++y)
        for (int x = 3; x <= 4; ++x) map.set_occupied({x, y}, true);
    return map;
}

/// 8x8 map with a single unpassable cell at (4,4).
inline GridMap single_cell_fixture() {
    GridMap map(8, 8);
    map.set_occupied({4, 4}, true);
    return map;
}

/// 12x12 map with an obstacle rectangle spanning (4,4)-(7,7).
inline GridMap block_fixture() {
    GridMap map(12, 12);
    for (int y = 4; y <= 7; ++y)
        for (int x = 4; x <= 7; ++x) map.set_occupied({x, y}, true);
    return map;
}

} // namespace topo::testing
