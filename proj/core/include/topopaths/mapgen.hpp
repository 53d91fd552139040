#pragma once

#include "topopaths/grid.hpp"

#include <cstdint>
#include <vector>

namespace topo::mapgen {

/// Deterministic city-style map: rectangular building blocks separated by a
/// street grid, with occasional plazas. Streets are shifted so that every
/// coordinate in keep_open lies on one, which also keeps them connected to
/// the street network. Used by the benchmarks and the acceptance suite in
/// place of downloaded city maps.
GridMap city_map(std::int32_t width, std::int32_t height, std::uint64_t seed,
                 const std::vector<GridCoord>& keep_open = {});

/// Deterministic scatter of rectangular obstacles away from the border.
/// component_target obstacles are placed; overlaps may merge them, so the
/// resulting 4-connected component count is <= component_target.
GridMap random_obstacle_map(std::int32_t width, std::int32_t height,
                            std::size_t component_target, std::uint64_t seed);

} // namespace topo::mapgen
