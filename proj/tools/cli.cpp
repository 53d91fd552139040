#include "cli.hpp"

#include "topopaths/bench.hpp"
#include "topopaths/geometry.hpp"
#include "topopaths/grid.hpp"
#include "topopaths/search.hpp"
#include "topopaths/svg.hpp"
#include "topopaths/tangent_graph.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

namespace topo::cli {

namespace {

GridCoord parse_coord(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected coordinate as X,Y, got '" + s + "'");
    try {
        const int x = std::stoi(s.substr(0, comma));
        const int y = std::stoi(s.substr(comma + 1));
        return {x, y};
    } catch (const std::exception&) {
        throw std::invalid_argument("expected coordinate as X,Y, got '" + s + "'");
    }
}

nlohmann::json path_to_json(const PartialPath& p) {
    nlohmann::json waypoints = nlohmann::json::array();
    for (const GridCoord g : p.waypoints) waypoints.push_back({g.x, g.y});
    return {{"length", p.length}, {"waypoints", waypoints}};
}

int cmd_build_graph(const std::string& map_path, const std::string& out_path,
                    std::ostream& out) {
    const GridMap map = load_movingai_map(map_path);
    const auto t0 = std::chrono::steady_clock::now();
    const TangentGraph graph = build_tangent_graph(map);
    const auto elapsed = std::chrono::steady_clock::now() - t0;
    save_graph(graph, out_path);
    out << "nodes " << graph.node_count() << "\n";
    out << "edges " << graph.edge_count() << "\n";
    out << "build_ms " << std::chrono::duration<double, std::milli>(elapsed).count() << "\n";
    return 0;
}

int cmd_find_paths(const std::string& map_path, const std::string& graph_path,
                   const std::string& start_str, const std::string& goal_str, unsigned k,
                   const std::string& svg_path, const std::string& json_path,
                   bool strict_tangency, std::ostream& out) {
    const GridMap map = load_movingai_map(map_path);
    const TangentGraph graph = load_graph(graph_path);
    if (graph.map_width != static_cast<std::uint32_t>(map.width()) ||
        graph.map_height != static_cast<std::uint32_t>(map.height()))
        throw std::invalid_argument("graph dimensions do not match the map");

    SearchConfig config;
    config.k = k;
    config.strict_tangency = strict_tangency;
    const SearchResult result =
        search_k_paths(map, graph, parse_coord(start_str), parse_coord(goal_str), config);

    nlohmann::json doc;
    doc["paths"] = nlohmann::json::array();
    for (const PartialPath& p : result.finished) doc["paths"].push_back(path_to_json(p));
    doc["telemetry"] = {{"elapsed_ms", result.elapsed_ms()},
                        {"iterations", result.iterations},
                        {"peak_queue", result.peak_primary},
                        {"truncated", result.truncated}};

    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot open for writing: " + json_path);
        f << doc.dump(2) << "\n";
    } else {
        out << doc.dump(2) << "\n";
    }

    if (!svg_path.empty()) {
        std::vector<std::vector<GridCoord>> polylines;
        polylines.reserve(result.finished.size());
        for (const PartialPath& p : result.finished) polylines.push_back(p.waypoints);
        render_svg(map, polylines, svg_path);
    }
    return 0;
}

int cmd_bench(const std::vector<std::string>& maps, unsigned pairs, std::uint64_t seed,
              const std::string& k_list, const std::string& csv_path,
              const std::string& json_path, std::ostream& err) {
    BenchOptions options;
    options.pairs = pairs;
    options.seed = seed;
    options.k_values.clear();
    std::stringstream ss(k_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        options.k_values.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (options.k_values.empty())
        throw std::invalid_argument("bench needs at least one k value");

    const std::vector<BenchRecord> records = run_bench(maps, options, err);

    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open for writing: " + csv_path);
    write_bench_csv(records, csv);

    std::ofstream json(json_path);
    if (!json) throw std::runtime_error("cannot open for writing: " + json_path);
    write_bench_json(records, json);
    return 0;
}

int cmd_verify(const std::string& map_path, const std::string& graph_path, std::ostream& out) {
    const GridMap map = load_movingai_map(map_path);
    const TangentGraph graph = load_graph(graph_path); // validates format + symmetry

    if (graph.map_width != static_cast<std::uint32_t>(map.width()) ||
        graph.map_height != static_cast<std::uint32_t>(map.height()))
        throw std::invalid_argument("graph dimensions do not match the map");

    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        if (!is_surface_grid(map, graph.nodes[i]))
            throw std::invalid_argument("node " + std::to_string(i) + " is not a surface grid");
        for (const std::uint32_t j : graph.adjacency[i]) {
            if (j < i) continue; // each undirected edge once
            if (!line_of_sight(map, graph.nodes[i], graph.nodes[j]))
                throw std::invalid_argument("edge " + std::to_string(i) + "-" +
                                            std::to_string(j) + " fails line of sight");
            if (!locally_collide_check(map, graph.nodes[i], graph.nodes[j]))
                throw std::invalid_argument("edge " + std::to_string(i) + "-" +
                                            std::to_string(j) +
                                            " fails the local collide condition");
        }
    }
    out << "graph OK: " << graph.node_count() << " nodes, " << graph.edge_count()
        << " edges\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tangent-graph planner for topologically distinct grid paths"};
    app.require_subcommand(1);

    std::string map_path, graph_path, out_path, start_str, goal_str;
    std::string svg_path, json_path, csv_path, k_list;
    std::vector<std::string> maps;
    unsigned k = 1, pairs = 100;
    std::uint64_t seed = 1;
    bool strict_tangency = false;

    auto* build = app.add_subcommand("build-graph", "Build a tangent graph and save it");
    build->add_option("--map", map_path, "MovingAI .map file")->required();
    build->add_option("--out", out_path, "Output .tgrf file")->required();

    auto* find = app.add_subcommand("find-paths", "Search k topologically distinct paths");
    find->add_option("--map", map_path, "MovingAI .map file")->required();
    find->add_option("--graph", graph_path, "Tangent graph .tgrf file")->required();
    find->add_option("--start", start_str, "Start cell X,Y")->required();
    find->add_option("--goal", goal_str, "Goal cell X,Y")->required();
    find->add_option("-k", k, "Required path count")->required();
    find->add_option("--svg", svg_path, "Render the result to an SVG file");
    find->add_option("--json", json_path, "Write the result JSON to a file");
    find->add_flag("--strict-tangency", strict_tangency,
                   "Require the local collide condition at both endpoints when attaching");

    auto* bench = app.add_subcommand("bench", "Run the benchmark protocol");
    bench->add_option("--maps", maps, "MovingAI .map files")->required()->expected(-1);
    bench->add_option("--pairs", pairs, "Endpoint pairs per map");
    bench->add_option("--seed", seed, "Sampling seed");
    bench->add_option("-k", k_list, "Comma-separated k values")->required();
    bench->add_option("--csv", csv_path, "Per-run CSV output file")->required();
    bench->add_option("--json", json_path, "Aggregate JSON output file")->required();

    auto* verify = app.add_subcommand("verify", "Re-check all invariants of a graph file");
    verify->add_option("--map", map_path, "MovingAI .map file")->required();
    verify->add_option("--graph", graph_path, "Tangent graph .tgrf file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (build->parsed()) return cmd_build_graph(map_path, out_path, out);
        if (find->parsed())
            return cmd_find_paths(map_path, graph_path, start_str, goal_str, k, svg_path,
                                  json_path, strict_tangency, out);
        if (bench->parsed())
            return cmd_bench(maps, pairs, seed, k_list, csv_path, json_path, err);
        if (verify->parsed()) return cmd_verify(map_path, graph_path, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const GraphFormatError& e) {
        err << "error: invalid graph file: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace topo::cli
