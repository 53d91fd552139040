#include "topopaths/geometry.hpp"
#include "topopaths/mapgen.hpp"
#include "topopaths/search.hpp"
#include "topopaths/tangent_graph.hpp"

#include <benchmark/benchmark.h>

using namespace topo;

namespace {

const GridMap& city() {
    static const GridMap map = mapgen::city_map(256, 256, 1, {{59, 72}, {109, 214}});
    return map;
}

const TangentGraph& city_graph() {
    static const TangentGraph graph = build_tangent_graph(city());
    return graph;
}

} // namespace

static void BM_line_of_sight(benchmark::State& state) {
    const GridMap& map = city();
    std::size_t i = 0;
    for (auto _ : state) {
        const std::int32_t off = static_cast<std::int32_t>(i++ % 64);
        benchmark::DoNotOptimize(line_of_sight(map, {8, 8 + off}, {240, 250 - off}));
    }
}
BENCHMARK(BM_line_of_sight);

static void BM_trace_segment(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        const std::int32_t off = static_cast<std::int32_t>(i++ % 64);
        benchmark::DoNotOptimize(trace_segment({0, off}, {255, 255 - off}).cells.size());
    }
}
BENCHMARK(BM_trace_segment);

static void BM_locally_collide(benchmark::State& state) {
    const GridMap& map = city();
    const TangentGraph& g = city_graph();
    std::size_t i = 0;
    for (auto _ : state) {
        const GridCoord a = g.nodes[i % g.node_count()];
        const GridCoord b = g.nodes[(i * 7 + 13) % g.node_count()];
        ++i;
        if (a == b) continue;
        benchmark::DoNotOptimize(locally_collide_check(map, a, b));
    }
}
BENCHMARK(BM_locally_collide);

static void BM_build_graph(benchmark::State& state) {
    const std::int32_t size = static_cast<std::int32_t>(state.range(0));
    const GridMap map = size == 256 ? city() : mapgen::city_map(size, size, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_tangent_graph(map).node_count());
    }
}
BENCHMARK(BM_build_graph)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_search_k(benchmark::State& state) {
    const GridMap& map = city();
    const TangentGraph& graph = city_graph();
    SearchConfig config;
    config.k = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        const SearchResult r = search_k_paths(map, graph, {59, 72}, {109, 214}, config);
        benchmark::DoNotOptimize(r.finished.size());
    }
}
BENCHMARK(BM_search_k)->Arg(10)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
