#include "topopaths/tangent_graph.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>

namespace topo {

std::size_t TangentGraph::edge_count() const {
    std::size_t degrees = 0;
    for (const auto& adj : adjacency) degrees += adj.size();
    return degrees / 2;
}

namespace {

bool frontier_has_obstacle(const GridMap& map, GridCoord g) {
    for (const GridCoord f : frontier(g))
        if (map.is_obstacle(f)) return true;
    return false;
}

// One direction of the local collide condition: distances from origin to the
// surface cells in far's frontier, colliding vs free.
bool collide_condition_from(const GridMap& map, GridCoord origin, GridCoord far) {
    if (!frontier_has_obstacle(map, far)) return false;
    double longest_colliding = 0.0;
    double shortest_free = std::numeric_limits<double>::infinity();
    for (const GridCoord f : frontier(far)) {
        if (!is_surface_grid(map, f)) continue;
        const double d = distance(origin, f);
        if (line_of_sight(map, origin, f)) shortest_free = std::min(shortest_free, d);
        else longest_colliding = std::max(longest_colliding, d);
    }
    return longest_colliding > shortest_free;
}

} // namespace

bool locally_collide_check(const GridMap& map, GridCoord g1, GridCoord g2,
                           bool strict_both_ends) {
    if (strict_both_ends)
        return collide_condition_from(map, g1, g2) && collide_condition_from(map, g2, g1);
    return collide_condition_from(map, g1, g2) || collide_condition_from(map, g2, g1);
}

std::vector<GridCoord> visible_set(const GridMap& map, GridCoord g,
                                   const std::vector<GridCoord>& candidates) {
    std::vector<GridCoord> out;
    for (const GridCoord c : candidates)
        if (c != g && line_of_sight(map, g, c)) out.push_back(c);
    return out;
}

namespace {

// Upper-triangle line-of-sight cache over the candidate set. Row i stores
// bits for j > i; the diagonal is implicitly true.
class LosMatrix {
public:
    LosMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(stride_ * n, 0) {}

    void set(std::size_t i, std::size_t j) {
        bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    bool get(std::size_t i, std::size_t j) const {
        if (i == j) return true;
        if (i > j) std::swap(i, j);
        return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1;
    }

private:
    std::size_t n_;
    std::size_t stride_;
    std::vector<std::uint64_t> bits_;
};

// Bounds checks are redundant once both endpoints are known to be in the map:
// the supercover of a segment between in-map cell centers stays in the map.
bool los_in_map(const GridMap& map, GridCoord a, GridCoord b) {
    return for_each_segment_cell(a, b, [&](GridCoord c) { return map.is_passable_unchecked(c); });
}

} // namespace

TangentGraph build_tangent_graph(const GridMap& map) {
    TangentGraph graph;
    graph.map_width = static_cast<std::uint32_t>(map.width());
    graph.map_height = static_cast<std::uint32_t>(map.height());

    const std::vector<GridCoord> candidates = surface_grids(map);
    const std::size_t n = candidates.size();
    if (n == 0) return graph;

    std::vector<std::int32_t> candidate_at(
        static_cast<std::size_t>(map.width()) * static_cast<std::size_t>(map.height()), -1);
    auto cell_index = [&](GridCoord g) -> std::int32_t {
        if (!map.in_bounds(g)) return -1;
        return candidate_at[static_cast<std::size_t>(g.y) * map.width() + g.x];
    };
    for (std::size_t i = 0; i < n; ++i)
        candidate_at[static_cast<std::size_t>(candidates[i].y) * map.width() +
                     candidates[i].x] = static_cast<std::int32_t>(i);

    LosMatrix los(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (los_in_map(map, candidates[i], candidates[j])) los.set(i, j);

    // Surface cells in each candidate's frontier, plus the obstacle-presence
    // gate of the collide condition, precomputed once per candidate.
    std::vector<std::vector<std::uint32_t>> frontier_surface(n);
    std::vector<std::uint8_t> gate(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        gate[i] = frontier_has_obstacle(map, candidates[i]) ? 1 : 0;
        for (const GridCoord f : frontier(candidates[i])) {
            const std::int32_t k = cell_index(f);
            if (k >= 0) frontier_surface[i].push_back(static_cast<std::uint32_t>(k));
        }
    }

    auto collide_from = [&](std::size_t origin, std::size_t far) {
        if (!gate[far]) return false;
        double longest_colliding = 0.0;
        double shortest_free = std::numeric_limits<double>::infinity();
        for (const std::uint32_t k : frontier_surface[far]) {
            const double d = distance(candidates[origin], candidates[k]);
            if (los.get(origin, k)) shortest_free = std::min(shortest_free, d);
            else longest_colliding = std::max(longest_colliding, d);
        }
        return longest_colliding > shortest_free;
    };

    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!los.get(i, j)) continue;
            if (collide_from(i, j) || collide_from(j, i)) {
                adj[i].push_back(static_cast<std::uint32_t>(j));
                adj[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }

    // Candidates that acquired no edge are dropped; survivors keep their
    // row-major relative order.
    std::vector<std::uint32_t> remap(n, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].empty()) continue;
        remap[i] = static_cast<std::uint32_t>(graph.nodes.size());
        graph.nodes.push_back(candidates[i]);
    }
    graph.adjacency.resize(graph.nodes.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (adj[i].empty()) continue;
        auto& out = graph.adjacency[remap[i]];
        out.reserve(adj[i].size());
        for (const std::uint32_t j : adj[i]) out.push_back(remap[j]);
        std::sort(out.begin(), out.end());
    }
    return graph;
}

GraphFormatError::GraphFormatError(std::size_t offset, const std::string& what)
    : std::runtime_error("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

namespace {

constexpr char kMagic[4] = {'T', 'G', 'R', 'F'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

class Reader {
public:
    explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    std::size_t offset() const { return off_; }

    std::uint16_t u16(const char* what) {
        need(2, what);
        const std::uint16_t v =
            static_cast<std::uint16_t>(bytes_[off_] | (bytes_[off_ + 1] << 8));
        off_ += 2;
        return v;
    }

    std::uint32_t u32(const char* what) {
        need(4, what);
        const std::uint32_t v = static_cast<std::uint32_t>(bytes_[off_]) |
                                (static_cast<std::uint32_t>(bytes_[off_ + 1]) << 8) |
                                (static_cast<std::uint32_t>(bytes_[off_ + 2]) << 16) |
                                (static_cast<std::uint32_t>(bytes_[off_ + 3]) << 24);
        off_ += 4;
        return v;
    }

    void need(std::size_t count, const char* what) const {
        if (off_ + count > bytes_.size())
            throw GraphFormatError(off_, std::string("truncated file while reading ") + what);
    }

    bool at_end() const { return off_ == bytes_.size(); }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t off_ = 0;
};

} // namespace

std::vector<std::uint8_t> serialize_graph(const TangentGraph& graph) {
    std::vector<std::uint8_t> out;
    out.reserve(18 + graph.nodes.size() * 12 + graph.edge_count() * 8);
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u16(out, kVersion);
    put_u32(out, graph.map_width);
    put_u32(out, graph.map_height);
    put_u32(out, static_cast<std::uint32_t>(graph.nodes.size()));
    for (const GridCoord g : graph.nodes) {
        put_u32(out, static_cast<std::uint32_t>(g.x));
        put_u32(out, static_cast<std::uint32_t>(g.y));
    }
    for (const auto& adj : graph.adjacency) {
        put_u32(out, static_cast<std::uint32_t>(adj.size()));
        for (const std::uint32_t j : adj) put_u32(out, j);
    }
    return out;
}

TangentGraph deserialize_graph(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes);

    r.need(4, "magic");
    for (std::size_t i = 0; i < 4; ++i)
        if (bytes[i] != static_cast<std::uint8_t>(kMagic[i]))
            throw GraphFormatError(i, "bad magic, expected 'TGRF'");
    r.u32("magic");

    const std::size_t version_off = r.offset();
    const std::uint16_t version = r.u16("format version");
    if (version != kVersion)
        throw GraphFormatError(version_off,
                               "unsupported format version " + std::to_string(version));

    TangentGraph graph;
    graph.map_width = r.u32("map width");
    graph.map_height = r.u32("map height");
    const std::uint32_t n = r.u32("node count");

    graph.nodes.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::size_t off = r.offset();
        const std::uint32_t x = r.u32("node x");
        const std::uint32_t y = r.u32("node y");
        if (x >= graph.map_width || y >= graph.map_height)
            throw GraphFormatError(off, "node coordinate outside the stored map dimensions");
        graph.nodes.push_back({static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)});
    }

    graph.adjacency.resize(n);
    std::vector<std::size_t> list_offset(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t degree = r.u32("adjacency degree");
        list_offset[i] = r.offset();
        auto& adj = graph.adjacency[i];
        adj.reserve(degree);
        for (std::uint32_t d = 0; d < degree; ++d) {
            const std::size_t off = r.offset();
            const std::uint32_t j = r.u32("neighbor index");
            if (j >= n)
                throw GraphFormatError(off, "neighbor index " + std::to_string(j) +
                                                " out of range (node count " +
                                                std::to_string(n) + ")");
            if (j == i) throw GraphFormatError(off, "self-loop adjacency entry");
            if (!adj.empty() && j <= adj.back())
                throw GraphFormatError(off, "adjacency list not sorted strictly ascending");
            adj.push_back(j);
        }
    }
    if (!r.at_end())
        throw GraphFormatError(r.offset(), "trailing bytes after adjacency lists");

    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::size_t pos = 0; pos < graph.adjacency[i].size(); ++pos) {
            const std::uint32_t j = graph.adjacency[i][pos];
            const auto& back = graph.adjacency[j];
            if (!std::binary_search(back.begin(), back.end(), i))
                throw GraphFormatError(list_offset[i] + pos * 4,
                                       "asymmetric adjacency: " + std::to_string(i) + " -> " +
                                           std::to_string(j) + " has no reverse entry");
        }
    }
    return graph;
}

void save_graph(const TangentGraph& graph, const std::string& path) {
    const std::vector<std::uint8_t> bytes = serialize_graph(graph);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

TangentGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    const std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in) throw std::runtime_error("read failed: " + path);
    return deserialize_graph(bytes);
}

} // namespace topo
