// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 4-7 run against a deterministic synthetic city map unless
// BERLIN_MAP points at a real MovingAI city file.

#include "topopaths/bench.hpp"
#include "topopaths/geometry.hpp"
#include "topopaths/grid.hpp"
#include "topopaths/homotopy.hpp"
#include "topopaths/mapgen.hpp"
#include "topopaths/search.hpp"
#include "topopaths/svg.hpp"
#include "topopaths/tangent_graph.hpp"

#include "cli.hpp"
#include "support/oracles.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

using namespace topo;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << "\n";
    if (!pass) ++failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CorpusQuery {
    const GridMap* map;
    const TangentGraph* graph;
    GridCoord start;
    GridCoord goal;
    SearchResult result;
};

GridMap corpus_map(int index) {
    for (std::uint64_t bump = 0;; ++bump) {
        GridMap map = mapgen::random_obstacle_map(
            64, 64, static_cast<std::size_t>(3 + index % 18),
            1000 + static_cast<std::uint64_t>(index) * 131 + bump);
        const std::size_t components = find_obstacle_components(map).size();
        if (components >= 3 && components <= 20) return map;
    }
}

} // namespace

int main() {
    std::cout << "acceptance suite\n";

    // ---- Shared corpus: 50 seeded random 64x64 maps, 3 queries each, k=16.
    const auto corpus_t0 = Clock::now();
    std::vector<GridMap> maps;
    std::vector<TangentGraph> graphs;
    maps.reserve(50);
    for (int i = 0; i < 50; ++i) maps.push_back(corpus_map(i));
    for (const GridMap& m : maps) graphs.push_back(build_tangent_graph(m));

    std::vector<CorpusQuery> queries;
    SearchConfig corpus_config;
    corpus_config.k = 16;
    for (int i = 0; i < 50; ++i) {
        const auto pairs = sample_endpoints(maps[static_cast<std::size_t>(i)], 3,
                                            500 + static_cast<std::uint64_t>(i));
        for (const auto& [start, goal] : pairs) {
            CorpusQuery q{&maps[static_cast<std::size_t>(i)],
                          &graphs[static_cast<std::size_t>(i)], start, goal, {}};
            q.result = search_k_paths(*q.map, *q.graph, start, goal, corpus_config);
            queries.push_back(std::move(q));
        }
    }

    // ---- Criterion 1: pairwise topological distinctness under the oracle.
    {
        std::size_t pairs_checked = 0, same = 0, inconclusive = 0, multi_queries = 0;
        for (const CorpusQuery& q : queries) {
            const auto& paths = q.result.finished;
            if (paths.size() < 2) continue;
            ++multi_queries;
            for (std::size_t a = 0; a < paths.size(); ++a) {
                for (std::size_t b = a + 1; b < paths.size(); ++b) {
                    ++pairs_checked;
                    switch (homotopy_distinct(*q.map, paths[a].waypoints, paths[b].waypoints)) {
                    case HomotopyVerdict::same: ++same; break;
                    case HomotopyVerdict::inconclusive: ++inconclusive; break;
                    case HomotopyVerdict::distinct: break;
                    }
                }
            }
        }
        const double inconclusive_rate =
            pairs_checked ? static_cast<double>(inconclusive) / static_cast<double>(pairs_checked)
                          : 0.0;
        const bool pass = pairs_checked > 0 && same == 0 && inconclusive_rate < 0.01;
        std::ostringstream d;
        d << "distinctness: " << pairs_checked << " pairs over " << multi_queries
          << " multi-path queries, same=" << same << ", inconclusive=" << inconclusive
          << " (rate " << inconclusive_rate << "), corpus+searches took "
          << ms_since(corpus_t0) / 1000.0 << " s";
        report(1, pass, d.str());
    }

    // ---- Criterion 2: shortest path agrees with the independent reference.
    {
        std::size_t agree = 0, total = 0;
        for (const CorpusQuery& q : queries) {
            ++total;
            const auto oracle =
                topo::testing::oracle_shortest_length(*q.map, *q.graph, q.start, q.goal,
                                                      corpus_config);
            if (q.result.finished.empty()) {
                if (!oracle.has_value()) ++agree;
                continue;
            }
            if (!oracle.has_value()) continue;
            const double got = q.result.finished.front().length;
            if (std::abs(got - *oracle) <= 1e-6 * std::max(1.0, std::abs(*oracle))) ++agree;
        }
        const bool pass = total > 0 && agree == total;
        std::ostringstream d;
        d << "shortest-path agreement on " << agree << "/" << total << " queries";
        report(2, pass, d.str());
    }

    // ---- Criterion 3: tautness and collision freedom of every returned path.
    {
        std::size_t paths_checked = 0, violations = 0;
        for (const CorpusQuery& q : queries) {
            for (const PartialPath& p : q.result.finished) {
                ++paths_checked;
                const auto& w = p.waypoints;
                bool ok = true;
                for (std::size_t i = 1; i < w.size() && ok; ++i)
                    ok = line_of_sight(*q.map, w[i - 1], w[i]);
                for (std::size_t i = 2; i + 2 < w.size() && ok; ++i)
                    ok = gets_closer_to_obstacle(*q.map, w[i - 1], w[i], w[i + 1]);
                if (!ok) ++violations;
            }
        }
        const bool pass = paths_checked > 0 && violations == 0;
        std::ostringstream d;
        d << "LOS + cone sweep over " << paths_checked << " paths, violations=" << violations;
        report(3, pass, d.str());
    }

    // ---- City-scale instance (Berlin stand-in unless BERLIN_MAP is set).
    const char* berlin_env = std::getenv("BERLIN_MAP");
    GridMap city;
    std::string city_desc;
    if (berlin_env != nullptr) {
        city = load_movingai_map(berlin_env);
        city_desc = berlin_env;
    } else {
        city = mapgen::city_map(256, 256, 1, {{59, 72}, {109, 214}});
        city_desc = "synthetic city 256x256 (seed 1)";
    }
    const GridCoord city_start{59, 72};
    const GridCoord city_goal{109, 214};

    // ---- Criterion 6: graph construction scale (built first, reused below).
    const auto build_t0 = Clock::now();
    const TangentGraph city_graph = build_tangent_graph(city);
    const double build_ms = ms_since(build_t0);
    const std::size_t file_size = serialize_graph(city_graph).size();
    {
        const bool pass = build_ms <= 5000.0 && city_graph.node_count() >= 800 &&
                          city_graph.node_count() <= 3300 && file_size >= 20 * 1024 &&
                          file_size <= 300 * 1024;
        std::ostringstream d;
        d << city_desc << ": build " << build_ms << " ms (limit 5000), nodes "
          << city_graph.node_count() << " (window [800,3300]), file " << file_size
          << " bytes (window [20480,307200]), edges " << city_graph.edge_count();
        report(6, pass, d.str());
    }

    // ---- Criterion 4: queue bound and the unlimited comparison fixture.
    {
        SearchConfig limited;
        limited.k = 200;
        const SearchResult bounded =
            search_k_paths(city, city_graph, city_start, city_goal, limited);

        SearchConfig open = limited;
        open.limit_queue = false;
        const SearchResult wide = search_k_paths(city, city_graph, city_start, city_goal, open);

        const bool pass = queue_bound_property(bounded.queue_trace, 200) &&
                          wide.peak_primary > bounded.peak_primary;
        std::ostringstream d;
        d << "primary queue <= 200 throughout (peak " << bounded.peak_primary
          << "); unlimited fixture peak " << wide.peak_primary << " (paths "
          << bounded.finished.size() << "/" << wide.finished.size() << ")";
        report(4, pass, d.str());
    }

    // ---- Criterion 5: desk-scale performance envelope.
    {
        SearchConfig c200;
        c200.k = 200;
        const SearchResult r200 = search_k_paths(city, city_graph, city_start, city_goal, c200);
        SearchConfig c400;
        c400.k = 400;
        const SearchResult r400 = search_k_paths(city, city_graph, city_start, city_goal, c400);
        const bool pass = r200.finished.size() >= 200 && r200.elapsed_ms() <= 500.0 &&
                          r400.finished.size() >= 400 && r400.elapsed_ms() <= 1000.0;
        std::ostringstream d;
        d << "k=200: " << r200.finished.size() << " paths in " << r200.elapsed_ms()
          << " ms (limit 500); k=400: " << r400.finished.size() << " paths in "
          << r400.elapsed_ms() << " ms (limit 1000)";
        report(5, pass, d.str());
    }

    // ---- Criterion 7: per-path cost trend over 20 seeded pairs.
    {
        const auto pairs = sample_endpoints(city, 20, 77);
        auto mean_path_ms = [&](std::uint32_t k) {
            double total = 0.0;
            std::size_t counted = 0;
            for (const auto& [s, g] : pairs) {
                SearchConfig config;
                config.k = k;
                config.time_budget = std::chrono::milliseconds(10000);
                const SearchResult r = search_k_paths(city, city_graph, s, g, config);
                if (!r.finished.empty()) {
                    total += r.elapsed_ms() / static_cast<double>(r.finished.size());
                    ++counted;
                }
            }
            return counted ? total / static_cast<double>(counted) : 0.0;
        };
        const double at10 = mean_path_ms(10);
        const double at320 = mean_path_ms(320);
        const bool pass = at320 <= at10;
        std::ostringstream d;
        d << "mean per-path: k=10 " << at10 << " ms, k=320 " << at320 << " ms";
        report(7, pass, d.str());
    }

    // ---- Criterion 8: serialization round trips, byte-exact.
    {
        std::size_t ok = 0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const GridMap map = mapgen::random_obstacle_map(
                24 + static_cast<std::int32_t>(seed % 17), 24 + static_cast<std::int32_t>(seed % 11),
                2 + seed % 9, seed * 7919);
            const TangentGraph g = build_tangent_graph(map);
            const auto bytes = serialize_graph(g);
            const TangentGraph back = deserialize_graph(bytes);
            if (back.nodes == g.nodes && back.adjacency == g.adjacency &&
                back.map_width == g.map_width && back.map_height == g.map_height &&
                serialize_graph(back) == bytes)
                ++ok;
        }
        report(8, ok == 100, "round trip on " + std::to_string(ok) + "/100 random graphs");
    }

    // ---- Criterion 9: CLI determinism modulo timing.
    {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "topopaths_acceptance";
        fs::create_directories(dir);
        const std::string map_path = (dir / "corpus0.map").string();
        {
            std::ofstream f(map_path);
            write_movingai_map(maps[0], f);
        }
        const std::string graph_path = (dir / "corpus0.tgrf").string();
        std::ostringstream sink, err;
        bool pass = topo::cli::run({"build-graph", "--map", map_path, "--out", graph_path},
                                   sink, err) == 0;

        auto run_query = [&](const std::string& json_path) {
            std::ostringstream out2, err2;
            const int rc = topo::cli::run(
                {"find-paths", "--map", map_path, "--graph", graph_path, "--start", "1,1",
                 "--goal", "62,62", "-k", "16", "--json", json_path},
                out2, err2);
            return rc == 0;
        };
        const std::string j1 = (dir / "run1.json").string();
        const std::string j2 = (dir / "run2.json").string();
        pass = pass && run_query(j1) && run_query(j2);
        if (pass) {
            std::ifstream f1(j1), f2(j2);
            auto d1 = nlohmann::json::parse(f1);
            auto d2 = nlohmann::json::parse(f2);
            d1["telemetry"].erase("elapsed_ms");
            d2["telemetry"].erase("elapsed_ms");
            pass = d1 == d2;
        }
        fs::remove_all(dir);
        report(9, pass, "find-paths twice with identical arguments, JSON equal minus timing");
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED\n"
                                : std::to_string(failures) + " CRITERIA FAILED\n");
    return failures == 0 ? 0 : 1;
}
