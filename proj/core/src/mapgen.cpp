#include "topopaths/mapgen.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace topo::mapgen {

namespace {

struct AxisCuts {
    // Alternating street/block spans; streets[i] = [start, end) of the i-th
    // street along the axis.
    std::vector<std::pair<std::int32_t, std::int32_t>> streets;
};

AxisCuts cut_axis(std::int32_t extent, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int32_t> street_w(5, 8);
    std::uniform_int_distribution<std::int32_t> block_w(40, 58);
    AxisCuts cuts;
    std::int32_t pos = street_w(rng); // border street margin
    cuts.streets.push_back({0, pos});
    while (pos < extent) {
        pos += block_w(rng);
        const std::int32_t sw = street_w(rng);
        if (pos >= extent - sw) break;
        cuts.streets.push_back({pos, pos + sw});
        pos += sw;
    }
    cuts.streets.push_back({extent - street_w(rng), extent});
    return cuts;
}

// Shifts the nearest street so its span covers coordinate c.
void cover_coordinate(AxisCuts& cuts, std::int32_t c) {
    auto* best = &cuts.streets.front();
    std::int32_t best_dist = std::numeric_limits<std::int32_t>::max();
    for (auto& s : cuts.streets) {
        if (c >= s.first && c < s.second) return;
        const std::int32_t d = c < s.first ? s.first - c : c - (s.second - 1);
        if (d < best_dist) {
            best_dist = d;
            best = &s;
        }
    }
    const std::int32_t width = best->second - best->first;
    if (c < best->first) best->first = c;
    else best->second = c + 1;
    // Preserve the street's width where possible.
    if (best->second - best->first > width + 2) {
        if (c < best->first + width) best->second = best->first + width;
        else best->first = best->second - width;
    }
}

} // namespace

GridMap city_map(std::int32_t width, std::int32_t height, std::uint64_t seed,
                 const std::vector<GridCoord>& keep_open) {
    std::mt19937_64 rng(seed);
    AxisCuts xcuts = cut_axis(width, rng);
    AxisCuts ycuts = cut_axis(height, rng);
    for (const GridCoord g : keep_open) cover_coordinate(xcuts, g.x);

    GridMap map(width, height, /*occupied=*/true);
    auto carve_streets = [&](const AxisCuts& cuts, bool vertical) {
        for (const auto& s : cuts.streets) {
            for (std::int32_t a = s.first; a < s.second; ++a) {
                if (vertical) {
                    for (std::int32_t y = 0; y < height; ++y) map.set_occupied({a, y}, false);
                } else {
                    for (std::int32_t x = 0; x < width; ++x) map.set_occupied({x, a}, false);
                }
            }
        }
    };
    carve_streets(xcuts, true);
    carve_streets(ycuts, false);

    // Plazas: clear a block outright now and then; jitter building margins
    // so corners do not align across the whole map.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::int32_t> margin(0, 2);
    for (std::size_t yi = 0; yi + 1 < ycuts.streets.size(); ++yi) {
        for (std::size_t xi = 0; xi + 1 < xcuts.streets.size(); ++xi) {
            const std::int32_t x0 = xcuts.streets[xi].second;
            const std::int32_t x1 = xcuts.streets[xi + 1].first;
            const std::int32_t y0 = ycuts.streets[yi].second;
            const std::int32_t y1 = ycuts.streets[yi + 1].first;
            if (x0 >= x1 || y0 >= y1) continue;
            const bool plaza = unit(rng) < 0.10;
            const std::int32_t mx0 = margin(rng), mx1 = margin(rng);
            const std::int32_t my0 = margin(rng), my1 = margin(rng);
            for (std::int32_t y = y0; y < y1; ++y) {
                for (std::int32_t x = x0; x < x1; ++x) {
                    const bool inside_building = !plaza && x >= x0 + mx0 && x < x1 - mx1 &&
                                                 y >= y0 + my0 && y < y1 - my1;
                    if (!inside_building) map.set_occupied({x, y}, false);
                }
            }
        }
    }
    return map;
}

GridMap random_obstacle_map(std::int32_t width, std::int32_t height,
                            std::size_t component_target, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GridMap map(width, height, false);
    std::uniform_int_distribution<std::int32_t> side(3, std::max<std::int32_t>(4, width / 7));
    for (std::size_t i = 0; i < component_target; ++i) {
        const std::int32_t w = side(rng);
        const std::int32_t h = side(rng);
        // Keep obstacles off the border so loops can wind around every one.
        std::uniform_int_distribution<std::int32_t> px(2, std::max(2, width - w - 3));
        std::uniform_int_distribution<std::int32_t> py(2, std::max(2, height - h - 3));
        const std::int32_t x0 = px(rng);
        const std::int32_t y0 = py(rng);
        for (std::int32_t y = y0; y < y0 + h; ++y)
            for (std::int32_t x = x0; x < x0 + w; ++x) map.set_occupied({x, y}, true);
    }
    return map;
}

} // namespace topo::mapgen
