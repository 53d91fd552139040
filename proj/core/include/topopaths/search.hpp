#pragma once

#include "topopaths/geometry.hpp"
#include "topopaths/grid.hpp"
#include "topopaths/tangent_graph.hpp"

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

namespace topo {

/// Waypoint sequence under construction. The first waypoint is the start;
/// a finished path ends at the goal.
struct PartialPath {
    std::vector<GridCoord> waypoints;
    double length = 0.0;   // accumulated Euclidean length, cell units
    double priority = 0.0; // length + Euclidean distance from last waypoint to goal
    bool finished = false;
};

struct SearchConfig {
    std::uint32_t k = 1;
    /// Safety cap on BFS levels; 0 selects 10 * k * (1 + node count).
    std::uint64_t max_expansions = 0;
    /// Require the local collide condition at both endpoints when attaching
    /// start and goal (default: either endpoint, as in graph construction).
    bool strict_tangency = false;
    /// Apply the obstacle-cone test to the hop that appends the goal. The
    /// goal edge is a regular edge of the augmented graph, so edge transfers
    /// onto it are constrained like any other.
    bool cone_check_goal_hop = true;
    /// Disable the priority limitation (plain level BFS). Kept for the
    /// queue-growth comparison; exposed to tests and the bench harness.
    bool limit_queue = true;
    /// Wall-clock budget; zero means unbounded.
    std::chrono::milliseconds time_budget{0};
};

/// Per-query attachment of start and goal to the tangent graph. The base
/// graph is never mutated; this overlay carries the extra edges.
struct QueryOverlay {
    GridCoord start;
    GridCoord goal;
    bool direct = false;                     // line_of_sight(start, goal)
    std::vector<std::uint32_t> start_nodes;  // nodes reachable from start (PTC)
    std::vector<std::uint32_t> goal_nodes;   // nodes with an edge to goal (PTC)
    std::vector<std::uint8_t> goal_edge;     // per-node membership of goal_nodes
};

/// Primary and secondary queue sizes at the start of one BFS iteration.
struct QueueSample {
    std::size_t primary = 0;
    std::size_t secondary = 0;
};

struct SearchResult {
    std::vector<PartialPath> finished;   // sorted ascending by length
    std::vector<QueueSample> queue_trace;
    std::chrono::steady_clock::duration elapsed{};
    std::uint64_t iterations = 0;
    std::size_t peak_primary = 0;
    std::size_t peak_secondary = 0;
    bool truncated = false;

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(elapsed).count();
    }
};

/// True iff an in-map obstacle cell in g2's frontier lies strictly inside the
/// cone of the transfer g1 -> g2 -> g3. With opposite rays (straight-through
/// transfer) the cone covers the whole plane, so any adjacent obstacle
/// qualifies. Throws std::domain_error when g1 == g2 or g3 == g2.
bool gets_closer_to_obstacle(const GridMap& map, GridCoord g1, GridCoord g2, GridCoord g3);

/// The no-loop iteration constraint: appending next must not revisit a
/// waypoint and must not make the polyline touch or cross itself. The new
/// segment may share only the joint vertex with its predecessor.
bool no_loop_check(const PartialPath& path, GridCoord next);

/// Attaches start and goal to the graph through the point transfer
/// constraints (visibility + local collide) and emits the initial paths,
/// including the direct start->goal path when it has line of sight.
/// Throws std::invalid_argument for unpassable endpoints or start == goal.
std::pair<QueryOverlay, std::vector<PartialPath>> create_initial_paths(
    const GridMap& map, const TangentGraph& graph, GridCoord start, GridCoord goal,
    bool strict_tangency = false);

/// Level-synchronous breadth-first search with priority limitation: each
/// iteration expands the at-most-k best unfinished paths, spills the rest to
/// a secondary pool sorted by priority, and stops once k paths are finished
/// or every pool is exhausted. All finishers of the terminal iteration are
/// retained.
SearchResult search_k_paths(const GridMap& map, const TangentGraph& graph, GridCoord start,
                            GridCoord goal, const SearchConfig& config);

/// True iff the primary queue held at most k paths at every iteration start.
bool queue_bound_property(const std::vector<QueueSample>& trace, std::uint32_t k);

} // namespace topo
