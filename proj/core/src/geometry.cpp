#include "topopaths/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

double angle(GridCoord g1, GridCoord g2, GridCoord g3) {
    if (g1 == g2 || g3 == g2)
        throw std::domain_error("angle: zero-length ray at the cone vertex");
    const double ux = g1.x - g2.x, uy = g1.y - g2.y;
    const double vx = g3.x - g2.x, vy = g3.y - g2.y;
    const double dot = ux * vx + uy * vy;
    const double nu = std::sqrt(ux * ux + uy * uy);
    const double nv = std::sqrt(vx * vx + vy * vy);
    const double cosv = std::clamp(dot / (nu * nv), -1.0, 1.0);
    return std::acos(cosv);
}

Segment trace_segment(GridCoord a, GridCoord b) {
    Segment seg{a, b, {}};
    seg.cells.reserve(static_cast<std::size_t>(std::abs(b.x - a.x) + std::abs(b.y - a.y)) + 2);
    for_each_segment_cell(a, b, [&](GridCoord c) {
        seg.cells.push_back(c);
        return true;
    });
    return seg;
}

bool on_segment(GridCoord a, GridCoord b, GridCoord c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

bool segments_intersect(GridCoord p1, GridCoord p2, GridCoord q1, GridCoord q2) {
    const auto o1 = orientation(p1, p2, q1);
    const auto o2 = orientation(p1, p2, q2);
    const auto o3 = orientation(q1, q2, p1);
    const auto o4 = orientation(q1, q2, p2);

    if (o1 != o2 && o3 != o4) return true;

    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

} // namespace topo
