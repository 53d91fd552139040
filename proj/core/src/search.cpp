#include "topopaths/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace topo {

namespace {

std::string coord_str(GridCoord g) {
    return "(" + std::to_string(g.x) + "," + std::to_string(g.y) + ")";
}

std::int64_t dot(GridCoord origin, GridCoord a, GridCoord b) {
    return static_cast<std::int64_t>(a.x - origin.x) * (b.x - origin.x) +
           static_cast<std::int64_t>(a.y - origin.y) * (b.y - origin.y);
}

// A transfer whose joint lies strictly between its neighbors on one line adds
// a redundant vertex: the traversed curve equals the direct edge, so keeping
// such extensions would emit the same geometric path under several waypoint
// lists. They are rejected wholesale.
bool collinear_through(GridCoord a, GridCoord joint, GridCoord b) {
    return orientation(a, joint, b) == 0 && dot(joint, a, b) < 0;
}

// Total order used for every queue selection: better priority first, then
// shorter, then lexicographically smaller waypoint list.
bool better_path(const PartialPath& a, const PartialPath& b) {
    if (a.priority != b.priority) return a.priority < b.priority;
    if (a.length != b.length) return a.length < b.length;
    return a.waypoints < b.waypoints;
}

bool shorter_path(const PartialPath& a, const PartialPath& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.waypoints < b.waypoints;
}

} // namespace

bool gets_closer_to_obstacle(const GridMap& map, GridCoord g1, GridCoord g2, GridCoord g3) {
    const double cone_half_angle = angle(g1, g2, g3) / 2.0;

    // Opposite rays: the bisector is undefined and the cone half-angle is
    // pi/2 on both sides, so any adjacent obstacle keeps the transfer taut.
    const bool straight_through =
        orientation(g2, g1, g3) == 0 && dot(g2, g1, g3) < 0;

    double bis_x = 0.0, bis_y = 0.0;
    if (!straight_through) {
        const double n1 = distance(g1, g2);
        const double n3 = distance(g3, g2);
        bis_x = (g1.x - g2.x) / n1 + (g3.x - g2.x) / n3;
        bis_y = (g1.y - g2.y) / n1 + (g3.y - g2.y) / n3;
    }

    for (const GridCoord f : frontier(g2)) {
        if (!map.is_obstacle(f)) continue;
        if (straight_through) return true;
        const double fx = f.x - g2.x;
        const double fy = f.y - g2.y;
        const double cosv = (bis_x * fx + bis_y * fy) /
                            (std::hypot(bis_x, bis_y) * std::hypot(fx, fy));
        const double ang = std::acos(std::clamp(cosv, -1.0, 1.0));
        if (ang < cone_half_angle) return true;
    }
    return false;
}

bool no_loop_check(const PartialPath& path, GridCoord next) {
    const auto& w = path.waypoints;
    if (w.empty()) return true;

    for (const GridCoord g : w)
        if (g == next) return false;

    if (w.size() < 2) return true;

    const GridCoord last = w[w.size() - 1];
    const GridCoord prev = w[w.size() - 2];

    // The new segment may share only the joint vertex with its predecessor:
    // a collinear step back onto it is a zero-width loop.
    if (orientation(prev, last, next) == 0 && dot(last, prev, next) > 0) return false;

    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (segments_intersect(w[i], w[i + 1], last, next)) return false;
    return true;
}

std::pair<QueryOverlay, std::vector<PartialPath>> create_initial_paths(
    const GridMap& map, const TangentGraph& graph, GridCoord start, GridCoord goal,
    bool strict_tangency) {
    if (!map.is_passable(start))
        throw std::invalid_argument("start cell " + coord_str(start) + " is unpassable");
    if (!map.is_passable(goal))
        throw std::invalid_argument("goal cell " + coord_str(goal) + " is unpassable");
    if (start == goal)
        throw std::invalid_argument("start and goal coincide at " + coord_str(start));

    QueryOverlay overlay;
    overlay.start = start;
    overlay.goal = goal;
    overlay.direct = line_of_sight(map, start, goal);
    overlay.goal_edge.assign(graph.node_count(), 0);

    std::vector<PartialPath> paths;
    if (overlay.direct) {
        PartialPath direct;
        direct.waypoints = {start, goal};
        direct.length = distance(start, goal);
        direct.priority = direct.length;
        direct.finished = true;
        paths.push_back(std::move(direct));
    }

    for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
        const GridCoord node = graph.nodes[i];
        if (node != start && node != goal && line_of_sight(map, start, node) &&
            locally_collide_check(map, start, node, strict_tangency)) {
            overlay.start_nodes.push_back(i);
            PartialPath p;
            p.waypoints = {start, node};
            p.length = distance(start, node);
            p.priority = p.length + distance(node, goal);
            paths.push_back(std::move(p));
        }
        if (node != goal && line_of_sight(map, goal, node) &&
            locally_collide_check(map, node, goal, strict_tangency)) {
            overlay.goal_nodes.push_back(i);
            overlay.goal_edge[i] = 1;
        }
    }
    return {std::move(overlay), std::move(paths)};
}

namespace {

struct LevelQueues {
    std::vector<PartialPath> primary;
    std::vector<PartialPath> secondary; // kept sorted ascending by priority
};

// Top-k selection of the staging pool, remainder merged into the sorted
// secondary pool; refill from the secondary pool when a level yields fewer
// than k extensions.
void apply_priority_limit(std::vector<PartialPath>& staged, LevelQueues& q, std::uint32_t k) {
    std::sort(staged.begin(), staged.end(), better_path);
    if (staged.size() > k) {
        const auto split = staged.begin() + k;
        const std::size_t old_size = q.secondary.size();
        q.secondary.insert(q.secondary.end(), std::make_move_iterator(split),
                           std::make_move_iterator(staged.end()));
        std::inplace_merge(q.secondary.begin(),
                           q.secondary.begin() + static_cast<std::ptrdiff_t>(old_size),
                           q.secondary.end(), better_path);
        staged.erase(split, staged.end());
    }
    q.primary = std::move(staged);
    if (q.primary.size() < k && !q.secondary.empty()) {
        const std::size_t take = std::min<std::size_t>(k - q.primary.size(), q.secondary.size());
        q.primary.insert(q.primary.end(), std::make_move_iterator(q.secondary.begin()),
                         std::make_move_iterator(q.secondary.begin() +
                                                 static_cast<std::ptrdiff_t>(take)));
        q.secondary.erase(q.secondary.begin(),
                          q.secondary.begin() + static_cast<std::ptrdiff_t>(take));
    }
}

} // namespace

SearchResult search_k_paths(const GridMap& map, const TangentGraph& graph, GridCoord start,
                            GridCoord goal, const SearchConfig& config) {
    if (config.k < 1) throw std::invalid_argument("k must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();

    auto [overlay, initial] = create_initial_paths(map, graph, start, goal,
                                                   config.strict_tangency);

    const std::uint64_t max_expansions =
        config.max_expansions > 0
            ? config.max_expansions
            : 10ull * config.k * (1 + static_cast<std::uint64_t>(graph.node_count()));

    SearchResult result;
    std::vector<PartialPath> finished;

    auto extend = [&](const PartialPath& p, GridCoord next) {
        PartialPath child;
        child.waypoints.reserve(p.waypoints.size() + 1);
        child.waypoints.assign(p.waypoints.begin(), p.waypoints.end());
        child.waypoints.push_back(next);
        child.length = p.length + distance(p.waypoints.back(), next);
        child.priority = child.length + distance(next, goal);
        child.finished = next == goal;
        return child;
    };

    // A freshly created unfinished path whose head carries a goal edge spawns
    // a finished copy, subject to the no-loop constraint and, optionally, the
    // cone test on the final transfer.
    auto try_finish = [&](const PartialPath& p, std::uint32_t head_node) {
        if (!overlay.goal_edge[head_node]) return;
        const GridCoord head = p.waypoints.back();
        const GridCoord before = p.waypoints[p.waypoints.size() - 2];
        if (collinear_through(before, head, goal)) return;
        if (config.cone_check_goal_hop && !gets_closer_to_obstacle(map, before, head, goal))
            return;
        if (!no_loop_check(p, goal)) return;
        finished.push_back(extend(p, goal));
    };

    // Coordinate -> node index lookup; path heads are always graph nodes.
    const auto& nodes = graph.nodes;
    std::vector<std::int32_t> node_at(
        static_cast<std::size_t>(graph.map_width) * graph.map_height, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        node_at[static_cast<std::size_t>(nodes[i].y) * graph.map_width + nodes[i].x] =
            static_cast<std::int32_t>(i);
    auto node_index = [&](GridCoord g) {
        return node_at[static_cast<std::size_t>(g.y) * graph.map_width + g.x];
    };

    LevelQueues queues;
    {
        std::vector<PartialPath> staged;
        for (auto& p : initial) {
            if (p.finished) {
                finished.push_back(std::move(p));
                continue;
            }
            try_finish(p, static_cast<std::uint32_t>(node_index(p.waypoints.back())));
            staged.push_back(std::move(p));
        }
        if (config.limit_queue) {
            apply_priority_limit(staged, queues, config.k);
        } else {
            std::sort(staged.begin(), staged.end(), better_path);
            queues.primary = std::move(staged);
        }
    }

    // Finishing order is level-synchronous, not length-ordered, so the k-th
    // finisher may beat paths still in flight. After the count is reached,
    // iterate until no unfinished priority can undercut the current minimum
    // finished length; the heuristic never overestimates, so the minimum is
    // settled at that point.
    auto min_finished_settled = [&]() {
        double min_len = std::numeric_limits<double>::infinity();
        for (const PartialPath& p : finished) min_len = std::min(min_len, p.length);
        double best_pending = std::numeric_limits<double>::infinity();
        for (const PartialPath& p : queues.primary)
            best_pending = std::min(best_pending, p.priority);
        if (!queues.secondary.empty())
            best_pending = std::min(best_pending, queues.secondary.front().priority);
        return best_pending >= min_len;
    };

    while (true) {
        if (finished.size() >= config.k && min_finished_settled()) break;
        if (queues.primary.empty() && queues.secondary.empty()) break;
        if (result.iterations >= max_expansions) {
            result.truncated = true;
            break;
        }
        if (config.time_budget.count() > 0 &&
            std::chrono::steady_clock::now() - t0 >= config.time_budget) {
            result.truncated = true;
            break;
        }

        result.queue_trace.push_back({queues.primary.size(), queues.secondary.size()});
        result.peak_primary = std::max(result.peak_primary, queues.primary.size());
        result.peak_secondary = std::max(result.peak_secondary, queues.secondary.size());

        std::vector<PartialPath> staged;
        for (const PartialPath& p : queues.primary) {
            const GridCoord head = p.waypoints.back();
            const GridCoord before = p.waypoints[p.waypoints.size() - 2];
            const std::int32_t head_idx = node_index(head);
            for (const std::uint32_t w : graph.adjacency[static_cast<std::size_t>(head_idx)]) {
                const GridCoord next = nodes[w];
                if (collinear_through(before, head, next)) continue;
                if (!gets_closer_to_obstacle(map, before, head, next)) continue;
                if (!no_loop_check(p, next)) continue;
                PartialPath child = extend(p, next);
                if (child.finished) { // node coincides with the goal cell
                    finished.push_back(std::move(child));
                    continue;
                }
                try_finish(child, w);
                staged.push_back(std::move(child));
            }
        }
        ++result.iterations;

        if (config.limit_queue) {
            apply_priority_limit(staged, queues, config.k);
        } else {
            queues.primary = std::move(staged);
        }
    }

    std::sort(finished.begin(), finished.end(), shorter_path);
    result.finished = std::move(finished);
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

bool queue_bound_property(const std::vector<QueueSample>& trace, std::uint32_t k) {
    for (const QueueSample& s : trace)
        if (s.primary > k) return false;
    return true;
}

} // namespace topo
