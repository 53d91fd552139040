#pragma once

#include "topopaths/geometry.hpp"
#include "topopaths/grid.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace topo {

/// Undirected tangent graph over surface grids. Node order is row-major by
/// (y, x); adjacency lists are sorted ascending and symmetric. Edge lengths
/// are recomputed from coordinates.
struct TangentGraph {
    std::uint32_t map_width = 0;
    std::uint32_t map_height = 0;
    std::vector<GridCoord> nodes;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const;
};

/// The local collide condition: from either endpoint, the longest colliding
/// connection to a surface cell in the other endpoint's frontier exceeds the
/// shortest free one. Segments failing it are not locally shortest.
///
/// strict_both_ends requires the condition to hold in both directions
/// instead of either one.
bool locally_collide_check(const GridMap& map, GridCoord g1, GridCoord g2,
                           bool strict_both_ends = false);

/// Candidates visible from g: c != g and line_of_sight(map, g, c).
std::vector<GridCoord> visible_set(const GridMap& map, GridCoord g,
                                   const std::vector<GridCoord>& candidates);

/// Builds the tangent graph: every visible surface-grid pair that passes the
/// local collide condition becomes an edge; candidates with no edge are
/// dropped. Deterministic for a given map.
TangentGraph build_tangent_graph(const GridMap& map);

/// Raised by deserialize_graph; message names the byte offset.
class GraphFormatError : public std::runtime_error {
public:
    GraphFormatError(std::size_t offset, const std::string& what);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Binary layout, little-endian:
///   magic "TGRF", version u16 = 1, map width u32, map height u32,
///   node count n u32, n * (x u32, y u32),
///   per node: degree u32 followed by that many neighbor indices u32,
///   each adjacency list sorted ascending.
std::vector<std::uint8_t> serialize_graph(const TangentGraph& graph);

TangentGraph deserialize_graph(const std::vector<std::uint8_t>& bytes);

void save_graph(const TangentGraph& graph, const std::string& path);
TangentGraph load_graph(const std::string& path);

} // namespace topo
