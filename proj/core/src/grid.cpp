#include "topopaths/grid.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace topo {

GridMap::GridMap(std::int32_t width, std::int32_t height, bool occupied)
    : width_(width), height_(height),
      occupancy_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                 occupied ? 1 : 0) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("GridMap dimensions must be positive");
}

void GridMap::set_occupied(GridCoord g, bool occupied) {
    if (!in_bounds(g)) throw std::out_of_range("GridMap::set_occupied out of bounds");
    occupancy_[index(g)] = occupied ? 1 : 0;
}

std::size_t GridMap::passable_count() const {
    return static_cast<std::size_t>(
        std::count(occupancy_.begin(), occupancy_.end(), std::uint8_t{0}));
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string chomp(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
    return s;
}

bool terrain_passable(char c, bool& known) {
    switch (c) {
    case '.': case 'G': case 'S':
        known = true;
        return true;
    case '@': case 'O': case 'T': case 'W':
        known = true;
        return false;
    default:
        known = false;
        return false;
    }
}

} // namespace

GridMap parse_movingai_map(std::istream& in) {
    int lineno = 0;
    std::string line;

    auto next_line = [&](const char* what) {
        if (!std::getline(in, line))
            throw ParseError(lineno + 1, std::string("unexpected end of input, expected ") + what);
        ++lineno;
        line = chomp(line);
    };

    next_line("'type' header");
    if (line.rfind("type", 0) != 0)
        throw ParseError(lineno, "expected 'type' header, got '" + line + "'");

    next_line("'height' header");
    std::int64_t height = -1;
    {
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key >> height) || key != "height" || height <= 0)
            throw ParseError(lineno, "expected 'height H', got '" + line + "'");
    }

    next_line("'width' header");
    std::int64_t width = -1;
    {
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key >> width) || key != "width" || width <= 0)
            throw ParseError(lineno, "expected 'width W', got '" + line + "'");
    }

    next_line("'map' marker");
    if (line != "map")
        throw ParseError(lineno, "expected 'map' marker, got '" + line + "'");

    GridMap map(static_cast<std::int32_t>(width), static_cast<std::int32_t>(height));
    for (std::int32_t y = 0; y < height; ++y) {
        if (!std::getline(in, line))
            throw ParseError(lineno + 1, "unexpected end of input: " + std::to_string(height) +
                                             " map rows expected, got " + std::to_string(y));
        ++lineno;
        line = chomp(line);
        if (static_cast<std::int64_t>(line.size()) != width)
            throw ParseError(lineno, "row length " + std::to_string(line.size()) +
                                         " does not match width " + std::to_string(width));
        for (std::int32_t x = 0; x < width; ++x) {
            bool known = false;
            const bool passable = terrain_passable(line[static_cast<std::size_t>(x)], known);
            if (!known)
                throw ParseError(lineno, std::string("unknown terrain character '") +
                                             line[static_cast<std::size_t>(x)] + "'");
            if (!passable) map.set_occupied({x, y}, true);
        }
    }
    return map;
}

GridMap parse_movingai_map(const std::string& text) {
    std::istringstream in(text);
    return parse_movingai_map(in);
}

GridMap load_movingai_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    return parse_movingai_map(in);
}

void write_movingai_map(const GridMap& map, std::ostream& out) {
    out << "type octile\n";
    out << "height " << map.height() << "\n";
    out << "width " << map.width() << "\n";
    out << "map\n";
    for (std::int32_t y = 0; y < map.height(); ++y) {
        for (std::int32_t x = 0; x < map.width(); ++x)
            out << (map.is_passable({x, y}) ? '.' : '@');
        out << "\n";
    }
}

std::array<GridCoord, 8> frontier(GridCoord g) {
    return {{{g.x - 1, g.y - 1},
             {g.x, g.y - 1},
             {g.x + 1, g.y - 1},
             {g.x - 1, g.y},
             {g.x + 1, g.y},
             {g.x - 1, g.y + 1},
             {g.x, g.y + 1},
             {g.x + 1, g.y + 1}}};
}

bool is_surface_grid(const GridMap& map, GridCoord g) {
    if (!map.is_passable(g)) return false;
    bool has_free = false;
    bool has_obstacle = false;
    for (const GridCoord f : frontier(g)) {
        if (map.is_passable(f)) has_free = true;
        else if (map.is_obstacle(f)) has_obstacle = true;
        if (has_free && has_obstacle) return true;
    }
    return false;
}

std::vector<GridCoord> surface_grids(const GridMap& map) {
    std::vector<GridCoord> out;
    for (std::int32_t y = 0; y < map.height(); ++y)
        for (std::int32_t x = 0; x < map.width(); ++x)
            if (is_surface_grid(map, {x, y})) out.push_back({x, y});
    return out;
}

} // namespace topo
