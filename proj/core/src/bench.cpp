#include "topopaths/bench.hpp"

#include "topopaths/tangent_graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace topo {

namespace {

// 4-connected region labels; segment traversal cannot cut corners, so two
// cells are path-connectable only within one 4-connected region.
std::vector<std::int32_t> region_labels(const GridMap& map) {
    const std::int32_t w = map.width();
    const std::int32_t h = map.height();
    std::vector<std::int32_t> label(static_cast<std::size_t>(w) * h, -1);
    auto at = [&](GridCoord g) -> std::int32_t& {
        return label[static_cast<std::size_t>(g.y) * w + g.x];
    };
    std::int32_t next = 0;
    std::vector<GridCoord> stack;
    for (std::int32_t y = 0; y < h; ++y) {
        for (std::int32_t x = 0; x < w; ++x) {
            const GridCoord seed{x, y};
            if (!map.is_passable(seed) || at(seed) != -1) continue;
            stack.push_back(seed);
            at(seed) = next;
            while (!stack.empty()) {
                const GridCoord g = stack.back();
                stack.pop_back();
                const GridCoord sides[4] = {
                    {g.x - 1, g.y}, {g.x + 1, g.y}, {g.x, g.y - 1}, {g.x, g.y + 1}};
                for (const GridCoord s : sides) {
                    if (map.is_passable(s) && at(s) == -1) {
                        at(s) = next;
                        stack.push_back(s);
                    }
                }
            }
            ++next;
        }
    }
    return label;
}

} // namespace

std::vector<std::pair<GridCoord, GridCoord>> sample_endpoints(const GridMap& map, std::size_t n,
                                                              std::uint64_t seed) {
    std::vector<std::pair<GridCoord, GridCoord>> out;
    if (n == 0) return out;

    std::vector<GridCoord> passable;
    for (std::int32_t y = 0; y < map.height(); ++y)
        for (std::int32_t x = 0; x < map.width(); ++x)
            if (map.is_passable({x, y})) passable.push_back({x, y});
    if (passable.size() < 2)
        throw std::runtime_error("sample_endpoints: map has fewer than 2 passable cells");

    const std::vector<std::int32_t> label = region_labels(map);
    auto region = [&](GridCoord g) {
        return label[static_cast<std::size_t>(g.y) * map.width() + g.x];
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, passable.size() - 1);
    const std::size_t max_attempts = 100 * n;
    std::size_t attempts = 0;
    while (out.size() < n && attempts < max_attempts) {
        ++attempts;
        const GridCoord a = passable[pick(rng)];
        const GridCoord b = passable[pick(rng)];
        if (a == b || region(a) != region(b)) continue;
        out.push_back({a, b});
    }
    if (out.size() < n)
        throw std::runtime_error("sample_endpoints: only " + std::to_string(out.size()) +
                                 " of " + std::to_string(n) +
                                 " connected pairs found within the attempt budget");
    return out;
}

namespace {

std::string map_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

} // namespace

std::vector<BenchRecord> run_bench(const std::vector<std::string>& map_paths,
                                   const BenchOptions& options, std::ostream& diagnostics) {
    std::vector<BenchRecord> records;
    for (const std::string& map_path : map_paths) {
        if (!std::filesystem::exists(map_path)) {
            diagnostics << "warning: skipping missing map file: " << map_path << "\n";
            continue;
        }
        const GridMap map = load_movingai_map(map_path);

        std::filesystem::path cache =
            options.cache_dir.empty() ? std::filesystem::path(map_path)
                                      : std::filesystem::path(options.cache_dir) /
                                            std::filesystem::path(map_path).filename();
        cache.replace_extension(".tgrf");

        TangentGraph graph;
        if (std::filesystem::exists(cache)) {
            graph = load_graph(cache.string());
        } else {
            graph = build_tangent_graph(map);
            save_graph(graph, cache.string());
        }

        const auto pairs = sample_endpoints(map, options.pairs, options.seed);
        for (const auto& [start, goal] : pairs) {
            for (const std::uint32_t k : options.k_values) {
                SearchConfig config;
                config.k = k;
                config.time_budget =
                    std::chrono::duration_cast<std::chrono::milliseconds>(options.budget);
                const SearchResult result = search_k_paths(map, graph, start, goal, config);

                BenchRecord rec;
                rec.map_name = map_stem(map_path);
                rec.start = start;
                rec.goal = goal;
                rec.k = k;
                rec.elapsed_ms = result.elapsed_ms();
                rec.paths_found = result.finished.size();
                rec.mean_path_ms =
                    rec.paths_found ? rec.elapsed_ms / static_cast<double>(rec.paths_found) : 0.0;
                rec.truncated = result.truncated;
                rec.peak_primary = result.peak_primary;
                rec.peak_secondary = result.peak_secondary;
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "map,start_x,start_y,goal_x,goal_y,k,elapsed_ms,paths_found,mean_path_ms,"
           "truncated,peak_primary,peak_secondary\n";
    for (const BenchRecord& r : records) {
        std::ostringstream row;
        row.precision(6);
        row << std::fixed;
        row << r.map_name << "," << r.start.x << "," << r.start.y << "," << r.goal.x << ","
            << r.goal.y << "," << r.k << "," << r.elapsed_ms << "," << r.paths_found << ","
            << r.mean_path_ms << "," << (r.truncated ? 1 : 0) << "," << r.peak_primary << ","
            << r.peak_secondary;
        out << row.str() << "\n";
    }
}

void write_bench_json(const std::vector<BenchRecord>& records, std::ostream& out) {
    struct Agg {
        double total_ms = 0.0;
        double path_ms = 0.0;
        std::size_t runs = 0;
        std::size_t successes = 0;
    };
    std::map<std::pair<std::string, std::uint32_t>, Agg> groups;
    for (const BenchRecord& r : records) {
        Agg& a = groups[{r.map_name, r.k}];
        a.total_ms += r.elapsed_ms;
        a.path_ms += r.mean_path_ms;
        ++a.runs;
        if (!r.truncated) ++a.successes;
    }

    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [key, a] : groups) {
        doc.push_back({{"map", key.first},
                       {"k", key.second},
                       {"runs", a.runs},
                       {"mean_total_ms", a.total_ms / static_cast<double>(a.runs)},
                       {"mean_path_ms", a.path_ms / static_cast<double>(a.runs)},
                       {"success_rate", static_cast<double>(a.successes) /
                                            static_cast<double>(a.runs)}});
    }
    out << doc.dump(2) << "\n";
}

} // namespace topo
