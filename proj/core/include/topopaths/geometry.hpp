#pragma once

#include "topopaths/grid.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace topo {

/// Euclidean distance between cell centers, in cell units.
inline double distance(GridCoord a, GridCoord b) {
    const double dx = static_cast<double>(a.x) - static_cast<double>(b.x);
    const double dy = static_cast<double>(a.y) - static_cast<double>(b.y);
    return std::sqrt(dx * dx + dy * dy);
}

/// Angle at g2 between the rays g2->g1 and g2->g3, in [0, pi].
/// Throws std::domain_error when either ray has zero length.
double angle(GridCoord g1, GridCoord g2, GridCoord g3);

/// The continuous segment between the centers of a and b, together with the
/// supercover: every cell whose closed unit square the segment touches. A
/// segment through a lattice corner picks up all four cells at that corner.
struct Segment {
    GridCoord a;
    GridCoord b;
    std::vector<GridCoord> cells;
};

/// Visits the supercover cells of the segment a->b in traversal order,
/// starting at a and ending at b. The visitor returns false to stop early;
/// the function returns false iff the visitor stopped it.
///
/// Cell (x, y) is the closed unit square centered at (x, y). Doubling the
/// coordinates puts cell boundaries on odd integers, so every boundary and
/// corner event is an exact integer comparison.
template <typename Visit>
bool for_each_segment_cell(GridCoord a, GridCoord b, Visit&& visit) {
    if (!visit(a)) return false;
    if (a == b) return true;

    const std::int64_t dx = b.x - a.x;
    const std::int64_t dy = b.y - a.y;
    const std::int32_t sx = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
    const std::int32_t sy = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
    const std::int64_t adx = std::abs(dx);
    const std::int64_t ady = std::abs(dy);

    if (sx == 0 || sy == 0) {
        GridCoord c = a;
        while (c != b) {
            c.x += sx;
            c.y += sy;
            if (!visit(c)) return false;
        }
        return true;
    }

    // Crossing parameters along the segment: the next vertical boundary from
    // cell c sits at x = c.x + sx/2, reached at t = (2*(c.x - a.x) + sx) / (2*dx).
    // Numerators are kept against the common positive denominators 2*adx, 2*ady.
    GridCoord c = a;
    while (c != b) {
        const std::int64_t nx = 2 * static_cast<std::int64_t>(c.x - a.x) * sx + 1;
        const std::int64_t ny = 2 * static_cast<std::int64_t>(c.y - a.y) * sy + 1;
        const std::int64_t lhs = nx * ady; // t_x * (2*adx*ady)
        const std::int64_t rhs = ny * adx; // t_y * (2*adx*ady)
        if (lhs < rhs) {
            c.x += sx;
            if (!visit(c)) return false;
        } else if (rhs < lhs) {
            c.y += sy;
            if (!visit(c)) return false;
        } else {
            // Exact corner crossing: all four cells meet the segment.
            if (!visit({c.x + sx, c.y})) return false;
            if (!visit({c.x, c.y + sy})) return false;
            c.x += sx;
            c.y += sy;
            if (!visit(c)) return false;
        }
    }
    return true;
}

/// Materialized supercover of a->b.
Segment trace_segment(GridCoord a, GridCoord b);

/// True iff no supercover cell of a->b is unpassable on the map.
/// Out-of-map cells count as unpassable.
inline bool line_of_sight(const GridMap& map, GridCoord a, GridCoord b) {
    return for_each_segment_cell(a, b, [&](GridCoord c) { return map.is_passable(c); });
}

/// Sign of the cross product (b-a) x (c-a): counterclockwise > 0.
inline std::int64_t orientation(GridCoord a, GridCoord b, GridCoord c) {
    const std::int64_t v = static_cast<std::int64_t>(b.x - a.x) * (c.y - a.y) -
                           static_cast<std::int64_t>(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// True iff c lies on the closed segment a->b (collinearity assumed checked
/// by the caller via orientation == 0).
bool on_segment(GridCoord a, GridCoord b, GridCoord c);

/// True iff the closed segments p1->p2 and q1->q2 share at least one point.
/// Exact integer arithmetic; touching endpoints and collinear overlap count.
bool segments_intersect(GridCoord p1, GridCoord p2, GridCoord q1, GridCoord q2);

} // namespace topo
