#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {

/// Integer cell coordinate. Out-of-map coordinates (negative or beyond the
/// map size) are representable; maps treat them as unpassable.
struct GridCoord {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
    friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

struct GridCoordHash {
    std::size_t operator()(const GridCoord& g) const noexcept {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g.x)) << 32) |
            static_cast<std::uint32_t>(g.y));
    }
};

/// 2D occupancy raster. Immutable after construction; queries outside the
/// raster report unpassable.
class GridMap {
public:
    GridMap() = default;
    GridMap(std::int32_t width, std::int32_t height, bool occupied = false);

    std::int32_t width() const { return width_; }
    std::int32_t height() const { return height_; }

    bool in_bounds(GridCoord g) const {
        return g.x >= 0 && g.y >= 0 && g.x < width_ && g.y < height_;
    }

    bool is_passable(GridCoord g) const {
        return in_bounds(g) && !occupancy_[index(g)];
    }

    /// is_passable without the bounds check; g must be in bounds.
    bool is_passable_unchecked(GridCoord g) const { return !occupancy_[index(g)]; }

    /// In-map unpassable cell. False for out-of-map coordinates, which are
    /// unpassable by convention but not part of any obstacle.
    bool is_obstacle(GridCoord g) const {
        return in_bounds(g) && occupancy_[index(g)];
    }

    void set_occupied(GridCoord g, bool occupied);

    std::size_t passable_count() const;

private:
    std::size_t index(GridCoord g) const {
        return static_cast<std::size_t>(g.y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(g.x);
    }

    std::int32_t width_ = 0;
    std::int32_t height_ = 0;
    std::vector<std::uint8_t> occupancy_;
};

/// Raised by parse_movingai_map; message names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Parses the MovingAI `.map` text format:
///   type octile / height H / width W / map / H rows of W terrain chars.
/// '.', 'G', 'S' are passable; '@', 'O', 'T', 'W' are not.
GridMap parse_movingai_map(std::istream& in);
GridMap parse_movingai_map(const std::string& text);
GridMap load_movingai_map(const std::string& path);

void write_movingai_map(const GridMap& map, std::ostream& out);

/// The 8 cells of the Moore block around g, excluding g itself. Entries may
/// lie outside any particular map.
std::array<GridCoord, 8> frontier(GridCoord g);

/// Passable cell whose frontier holds at least one passable and at least one
/// in-map unpassable cell.
bool is_surface_grid(const GridMap& map, GridCoord g);

/// All surface grids in row-major (y, x) order.
std::vector<GridCoord> surface_grids(const GridMap& map);

} // namespace topo
