#pragma once

#include "topopaths/grid.hpp"
#include "topopaths/search.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace topo {

/// n start/goal pairs of distinct passable cells, uniform under a seeded
/// generator, resampling disconnected pairs (4-connected flood fill) up to
/// 100*n attempts. Throws std::runtime_error when the budget runs out,
/// naming how many pairs succeeded.
std::vector<std::pair<GridCoord, GridCoord>> sample_endpoints(const GridMap& map, std::size_t n,
                                                              std::uint64_t seed);

struct BenchRecord {
    std::string map_name;
    GridCoord start;
    GridCoord goal;
    std::uint32_t k = 0;
    double elapsed_ms = 0.0;
    std::size_t paths_found = 0;
    double mean_path_ms = 0.0;
    bool truncated = false;
    std::size_t peak_primary = 0;
    std::size_t peak_secondary = 0;
};

struct BenchOptions {
    std::size_t pairs = 100;
    std::vector<std::uint32_t> k_values = {10, 20, 30, 40, 80, 160, 320};
    std::uint64_t seed = 1;
    std::chrono::milliseconds budget{10000};
    /// Directory for cached .tgrf graph files; empty caches beside the map.
    std::string cache_dir;
};

/// The benchmark protocol: for each map x sampled pair x k, one search under
/// the wall-clock budget. Graphs are cached as .tgrf files and reused.
/// Missing map files are skipped with a warning on the diagnostic stream.
std::vector<BenchRecord> run_bench(const std::vector<std::string>& map_paths,
                                   const BenchOptions& options, std::ostream& diagnostics);

/// One row per record under the fixed header. Timing columns are the only
/// nondeterministic output.
void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out);

/// Aggregate per (map, k): mean total time, mean per-path time, success rate.
/// A run counts as failure only when the budget was breached; exhausting the
/// map's topology classes below k is a success.
void write_bench_json(const std::vector<BenchRecord>& records, std::ostream& out);

} // namespace topo
