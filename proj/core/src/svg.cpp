#include "topopaths/svg.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace topo {

namespace {

constexpr std::array<const char*, 16> kPalette = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
    "#9a6324", "#fffac8", "#800000", "#aaffc3",
};

} // namespace

void render_svg(const GridMap& map, const std::vector<std::vector<GridCoord>>& paths,
                std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << map.width()
        << "\" height=\"" << map.height() << "\" viewBox=\"0 0 " << map.width() << " "
        << map.height() << "\">\n";
    out << "<rect width=\"" << map.width() << "\" height=\"" << map.height()
        << "\" fill=\"#ffffff\"/>\n";

    // Obstacles, merged into horizontal runs.
    out << "<g fill=\"#404040\">\n";
    for (std::int32_t y = 0; y < map.height(); ++y) {
        std::int32_t x = 0;
        while (x < map.width()) {
            if (map.is_passable({x, y})) {
                ++x;
                continue;
            }
            std::int32_t run = x;
            while (run < map.width() && !map.is_passable({run, y})) ++run;
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << (run - x)
                << "\" height=\"1\"/>\n";
            x = run;
        }
    }
    out << "</g>\n";

    for (std::size_t i = 0; i < paths.size(); ++i) {
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kPalette.size()]
            << "\" stroke-width=\"0.4\" points=\"";
        for (std::size_t j = 0; j < paths[i].size(); ++j) {
            if (j) out << " ";
            out << (paths[i][j].x + 0.5) << "," << (paths[i][j].y + 0.5);
        }
        out << "\"/>\n";
    }

    if (!paths.empty() && paths.front().size() >= 2) {
        const GridCoord start = paths.front().front();
        const GridCoord goal = paths.front().back();
        out << "<circle cx=\"" << (start.x + 0.5) << "\" cy=\"" << (start.y + 0.5)
            << "\" r=\"1.2\" fill=\"#ff69b4\"/>\n";
        out << "<rect x=\"" << (goal.x - 0.7) << "\" y=\"" << (goal.y - 0.7)
            << "\" width=\"2.4\" height=\"2.4\" fill=\"#ffd700\"/>\n";
    }
    out << "</svg>\n";
}

void render_svg(const GridMap& map, const std::vector<std::vector<GridCoord>>& paths,
                const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    render_svg(map, paths, out);
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

} // namespace topo
