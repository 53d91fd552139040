#include "topopaths/bench.hpp"
#include "topopaths/homotopy.hpp"
#include "topopaths/mapgen.hpp"
#include "topopaths/search.hpp"
#include "topopaths/svg.hpp"
#include "topopaths/tangent_graph.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <queue>
#include <sstream>

using namespace topo;
using namespace topo::testing;

TEST_CASE("obstacle components are 4-connected with interior representatives") {
    GridMap map(10, 10);
    // L-shaped component plus a lone cell diagonal to it.
    for (const GridCoord g :
         {GridCoord{2, 2}, GridCoord{2, 3}, GridCoord{2, 4}, GridCoord{3, 4}})
        map.set_occupied(g, true);
    map.set_occupied({4, 5}, true); // diagonal contact only: separate component
    map.set_occupied({7, 7}, true);

    const auto components = find_obstacle_components(map);
    REQUIRE(components.size() == 3);
    std::size_t covered = 0;
    for (const auto& comp : components) {
        covered += comp.cells.size();
        // Representative coincides with a member cell center.
        bool on_member = false;
        for (const GridCoord g : comp.cells)
            on_member |= (comp.rep_x == g.x && comp.rep_y == g.y);
        CHECK(on_member);
    }
    CHECK(covered == 6);
}

TEST_CASE("winding numbers of simple loops") {
    // Counterclockwise square around the origin cellwise.
    const std::vector<GridCoord> loop = {{2, 2}, {6, 2}, {6, 6}, {2, 6}};
    int w = 0;
    REQUIRE(winding_number(loop, 4.0, 4.0, w));
    CHECK(std::abs(w) == 1);
    REQUIRE(winding_number(loop, 0.5, 0.5, w));
    CHECK(w == 0);
    // Point exactly on an edge fails.
    CHECK_FALSE(winding_number(loop, 4.0, 2.0, w));
}

TEST_CASE("identical paths are homotopic") {
    const GridMap map = two_by_two_fixture();
    const std::vector<GridCoord> p = {{1, 4}, {2, 2}, {5, 2}, {6, 4}};
    CHECK(homotopy_distinct(map, p, p) == HomotopyVerdict::same);
}

TEST_CASE("paths on either side of the block differ by one turn") {
    const GridMap map = two_by_two_fixture();
    const std::vector<GridCoord> above = {{1, 4}, {2, 2}, {5, 2}, {6, 4}};
    const std::vector<GridCoord> below = {{1, 4}, {3, 5}, {4, 5}, {6, 4}};
    CHECK(homotopy_distinct(map, above, below) == HomotopyVerdict::distinct);

    // Winding signature of the joined loop is +-1 on the single component.
    std::vector<GridCoord> loop(above);
    for (std::size_t i = below.size() - 1; i-- > 1;) loop.push_back(below[i]);
    const auto components = find_obstacle_components(map);
    REQUIRE(components.size() == 1);
    const WindingSignature sig = winding_signature(loop, components);
    REQUIRE(sig.values.size() == 1);
    CHECK(std::abs(sig.values[0]) == 1);
}

TEST_CASE("obstacle-free maps admit a single class") {
    const GridMap map(8, 8);
    const std::vector<GridCoord> p1 = {{0, 0}, {7, 7}};
    const std::vector<GridCoord> p2 = {{0, 0}, {0, 7}, {7, 7}};
    CHECK(homotopy_distinct(map, p1, p2) == HomotopyVerdict::same);
}

TEST_CASE("perturbed same-side copies stay homotopic") {
    const GridMap map = two_by_two_fixture();
    const std::vector<GridCoord> p1 = {{1, 4}, {2, 2}, {5, 2}, {6, 4}};
    const std::vector<GridCoord> p2 = {{1, 4}, {2, 1}, {5, 1}, {6, 4}};
    CHECK(homotopy_distinct(map, p1, p2) == HomotopyVerdict::same);
}

TEST_CASE("homotopy oracle validates its inputs") {
    const GridMap map(8, 8);
    CHECK_THROWS_AS(homotopy_distinct(map, {{0, 0}, {1, 1}}, {{0, 0}, {2, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(homotopy_distinct(map, {{0, 0}}, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("endpoint sampling") {
    const GridMap map = mapgen::random_obstacle_map(32, 32, 6, 5);

    CHECK(sample_endpoints(map, 0, 1).empty());

    const auto a = sample_endpoints(map, 25, 42);
    const auto b = sample_endpoints(map, 25, 42);
    CHECK(a == b);
    REQUIRE(a.size() == 25);
    for (const auto& [s, g] : a) {
        CHECK(map.is_passable(s));
        CHECK(map.is_passable(g));
        CHECK(s != g);
    }

    const auto c = sample_endpoints(map, 25, 43);
    CHECK(a != c);
}

TEST_CASE("endpoint sampling respects connectivity") {
    // Two halves separated by a full-height wall.
    GridMap map(9, 9);
    for (std::int32_t y = 0; y < 9; ++y) map.set_occupied({4, y}, true);
    const auto pairs = sample_endpoints(map, 40, 7);
    for (const auto& [s, g] : pairs) CHECK((s.x < 4) == (g.x < 4));
}

TEST_CASE("endpoint sampling reports exhaustion") {
    GridMap map(3, 1);
    map.set_occupied({1, 0}, true); // two disconnected passable cells
    CHECK_THROWS_AS(sample_endpoints(map, 1, 1), std::runtime_error);
}

TEST_CASE("svg output is well-formed with one polyline per path") {
    const GridMap map = two_by_two_fixture();
    const std::vector<std::vector<GridCoord>> paths = {
        {{1, 4}, {2, 2}, {5, 2}, {6, 4}},
        {{1, 4}, {3, 5}, {4, 5}, {6, 4}},
    };
    std::ostringstream out;
    render_svg(map, paths, out);
    const std::string svg = out.str();
    CHECK(topo::testing::xml_well_formed(svg));
    CHECK(topo::testing::count_tags(svg, "polyline") == 2);
    CHECK(topo::testing::count_tags(svg, "circle") == 1);

    std::ostringstream empty;
    render_svg(map, {}, empty);
    CHECK(topo::testing::xml_well_formed(empty.str()));
    CHECK(topo::testing::count_tags(empty.str(), "polyline") == 0);

    std::ostringstream tiny;
    render_svg(GridMap(1, 1), {}, tiny);
    CHECK(topo::testing::xml_well_formed(tiny.str()));
}

TEST_CASE("svg write failure raises an io error") {
    const GridMap map(2, 2);
    CHECK_THROWS_AS(render_svg(map, {}, "/nonexistent-dir/x.svg"), std::runtime_error);
}

TEST_CASE("bench protocol produces records, csv and json that agree") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "topopaths_bench_test";
    fs::create_directories(dir);
    const fs::path map_path = dir / "mini.map";
    {
        const GridMap map = mapgen::random_obstacle_map(24, 24, 4, 9);
        std::ofstream f(map_path);
        write_movingai_map(map, f);
    }

    BenchOptions options;
    options.pairs = 3;
    options.k_values = {2, 4};
    options.seed = 5;
    options.cache_dir = dir.string();

    std::ostringstream diag;
    const auto records =
        run_bench({map_path.string(), (dir / "missing.map").string()}, options, diag);
    CHECK(diag.str().find("missing.map") != std::string::npos);
    REQUIRE(records.size() == 6); // 3 pairs x 2 k-values, missing map skipped
    CHECK(fs::exists(dir / "mini.tgrf"));

    std::ostringstream csv;
    write_bench_csv(records, csv);
    const std::string csv_text = csv.str();
    CHECK(csv_text.rfind("map,start_x,start_y,goal_x,goal_y,k,elapsed_ms,paths_found,"
                         "mean_path_ms,truncated,peak_primary,peak_secondary\n",
                         0) == 0);
    CHECK(std::count(csv_text.begin(), csv_text.end(), '\n') == 7);

    // Aggregates recompute from the records.
    std::ostringstream json;
    write_bench_json(records, json);
    const auto doc = nlohmann::json::parse(json.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    for (const auto& group : doc) {
        const std::uint32_t k = group["k"].get<std::uint32_t>();
        double total = 0.0, path = 0.0;
        std::size_t runs = 0, ok = 0;
        for (const auto& r : records) {
            if (r.k != k) continue;
            total += r.elapsed_ms;
            path += r.mean_path_ms;
            ++runs;
            if (!r.truncated) ++ok;
        }
        REQUIRE(runs == group["runs"].get<std::size_t>());
        CHECK(group["mean_total_ms"].get<double>() ==
              doctest::Approx(total / static_cast<double>(runs)));
        CHECK(group["mean_path_ms"].get<double>() ==
              doctest::Approx(path / static_cast<double>(runs)));
        CHECK(group["success_rate"].get<double>() ==
              doctest::Approx(static_cast<double>(ok) / static_cast<double>(runs)));
    }

    // Determinism modulo the timing columns.
    const auto records2 = run_bench({map_path.string()}, options, diag);
    REQUIRE(records2.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records2[i].start == records[i].start);
        CHECK(records2[i].goal == records[i].goal);
        CHECK(records2[i].k == records[i].k);
        CHECK(records2[i].paths_found == records[i].paths_found);
        CHECK(records2[i].truncated == records[i].truncated);
        CHECK(records2[i].peak_primary == records[i].peak_primary);
        CHECK(records2[i].peak_secondary == records[i].peak_secondary);
    }
    fs::remove_all(dir);
}

TEST_CASE("city map generator keeps requested cells open and connected") {
    const std::vector<GridCoord> keep = {{59, 72}, {109, 214}};
    const GridMap city = mapgen::city_map(256, 256, 1, keep);
    CHECK(city.is_passable({59, 72}));
    CHECK(city.is_passable({109, 214}));

    // 4-connected flood fill from the first cell must reach the second.
    std::vector<char> seen(256 * 256, 0);
    std::queue<GridCoord> frontier_q;
    frontier_q.push({59, 72});
    seen[72 * 256 + 59] = 1;
    while (!frontier_q.empty()) {
        const GridCoord g = frontier_q.front();
        frontier_q.pop();
        const GridCoord sides[4] = {
            {g.x - 1, g.y}, {g.x + 1, g.y}, {g.x, g.y - 1}, {g.x, g.y + 1}};
        for (const GridCoord s2 : sides) {
            if (!city.is_passable(s2)) continue;
            char& mark = seen[static_cast<std::size_t>(s2.y) * 256 + s2.x];
            if (!mark) {
                mark = 1;
                frontier_q.push(s2);
            }
        }
    }
    CHECK(seen[214 * 256 + 109] == 1);

    // Determinism.
    const GridMap again = mapgen::city_map(256, 256, 1, keep);
    std::ostringstream a, b;
    write_movingai_map(city, a);
    write_movingai_map(again, b);
    CHECK(a.str() == b.str());
}
