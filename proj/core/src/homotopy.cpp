#include "topopaths/homotopy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace topo {

std::vector<ObstacleComponent> find_obstacle_components(const GridMap& map) {
    const std::int32_t w = map.width();
    const std::int32_t h = map.height();
    std::vector<std::int32_t> label(static_cast<std::size_t>(w) * h, -1);
    auto at = [&](GridCoord g) -> std::int32_t& {
        return label[static_cast<std::size_t>(g.y) * w + g.x];
    };

    std::vector<ObstacleComponent> components;
    std::vector<GridCoord> stack;
    for (std::int32_t y = 0; y < h; ++y) {
        for (std::int32_t x = 0; x < w; ++x) {
            const GridCoord seed{x, y};
            if (!map.is_obstacle(seed) || at(seed) != -1) continue;
            ObstacleComponent comp;
            comp.id = static_cast<int>(components.size());
            stack.push_back(seed);
            at(seed) = comp.id;
            while (!stack.empty()) {
                const GridCoord g = stack.back();
                stack.pop_back();
                comp.cells.push_back(g);
                const GridCoord sides[4] = {
                    {g.x - 1, g.y}, {g.x + 1, g.y}, {g.x, g.y - 1}, {g.x, g.y + 1}};
                for (const GridCoord s : sides) {
                    if (map.is_obstacle(s) && at(s) == -1) {
                        at(s) = comp.id;
                        stack.push_back(s);
                    }
                }
            }
            double cx = 0.0, cy = 0.0;
            for (const GridCoord g : comp.cells) {
                cx += g.x;
                cy += g.y;
            }
            cx /= static_cast<double>(comp.cells.size());
            cy /= static_cast<double>(comp.cells.size());
            double best = std::numeric_limits<double>::infinity();
            for (const GridCoord g : comp.cells) {
                const double d = (g.x - cx) * (g.x - cx) + (g.y - cy) * (g.y - cy);
                if (d < best) {
                    best = d;
                    comp.rep_x = g.x;
                    comp.rep_y = g.y;
                }
            }
            components.push_back(std::move(comp));
        }
    }
    return components;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kOnSegmentEps = 1e-12;
constexpr double kIntegerEps = 1e-6;

bool point_on_segment(double px, double py, GridCoord a, GridCoord b) {
    const double abx = b.x - a.x, aby = b.y - a.y;
    const double apx = px - a.x, apy = py - a.y;
    const double cross = abx * apy - aby * apx;
    const double len2 = abx * abx + aby * aby;
    if (len2 == 0.0) return apx * apx + apy * apy <= kOnSegmentEps;
    if (cross * cross > kOnSegmentEps * len2) return false;
    const double t = (apx * abx + apy * aby) / len2;
    return t >= 0.0 && t <= 1.0;
}

} // namespace

bool winding_number(const std::vector<GridCoord>& loop, double px, double py, int& out) {
    double total = 0.0;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const GridCoord a = loop[i];
        const GridCoord b = loop[(i + 1) % n];
        if (point_on_segment(px, py, a, b)) return false;
        const double ax = a.x - px, ay = a.y - py;
        const double bx = b.x - px, by = b.y - py;
        total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    }
    const double turns = total / kTwoPi;
    const double nearest = std::round(turns);
    if (std::abs(turns - nearest) * kTwoPi > kIntegerEps) return false;
    out = static_cast<int>(nearest);
    return true;
}

WindingSignature winding_signature(const std::vector<GridCoord>& loop,
                                   const std::vector<ObstacleComponent>& components) {
    WindingSignature sig;
    sig.values.reserve(components.size());
    for (const ObstacleComponent& comp : components) {
        int w = 0;
        if (!winding_number(loop, comp.rep_x, comp.rep_y, w))
            throw std::runtime_error("winding_signature: representative on the loop");
        sig.values.push_back(w);
    }
    return sig;
}

HomotopyVerdict homotopy_distinct(const GridMap& map, const std::vector<GridCoord>& p1,
                                  const std::vector<GridCoord>& p2) {
    if (p1.size() < 2 || p2.size() < 2)
        throw std::invalid_argument("homotopy_distinct: paths need at least two waypoints");
    if (p1.front() != p2.front() || p1.back() != p2.back())
        throw std::invalid_argument("homotopy_distinct: paths must share endpoints");

    // p1 followed by reversed p2, dropping the duplicated junction vertices.
    std::vector<GridCoord> loop(p1);
    for (std::size_t i = p2.size() - 1; i-- > 1;) loop.push_back(p2[i]);

    const std::vector<ObstacleComponent> components = find_obstacle_components(map);
    bool any_nonzero = false;
    for (const ObstacleComponent& comp : components) {
        double px = comp.rep_x;
        double py = comp.rep_y;
        int w = 0;
        if (!winding_number(loop, px, py, w)) {
            // Nudge toward the component centroid and retry once.
            double cx = 0.0, cy = 0.0;
            for (const GridCoord g : comp.cells) {
                cx += g.x;
                cy += g.y;
            }
            cx /= static_cast<double>(comp.cells.size());
            cy /= static_cast<double>(comp.cells.size());
            const double dx = cx - px, dy = cy - py;
            const double norm = std::hypot(dx, dy);
            if (norm == 0.0) return HomotopyVerdict::inconclusive;
            px += 1e-3 * dx / norm;
            py += 1e-3 * dy / norm;
            if (!winding_number(loop, px, py, w)) return HomotopyVerdict::inconclusive;
        }
        if (w != 0) any_nonzero = true;
    }
    return any_nonzero ? HomotopyVerdict::distinct : HomotopyVerdict::same;
}

} // namespace topo
