#ifndef NETCLUST_BENCHMARK_HPP
#define NETCLUST_BENCHMARK_HPP

#include <string>

#include "netclust/graph_io.hpp"
#include "netclust/gso.hpp"
#include "netclust/report.hpp"

namespace netclust {

struct BenchmarkConfig {
    std::string input_path;
    InputFormat format = InputFormat::gml;
    GsoParams params;
    int repeats = 1;
    int workers = 1;
    std::string dataset_name;  // empty: derived from the input file stem
};

struct BenchmarkResult {
    Report report;
    LoadedGraph loaded;
    Partition best_partition;  // canonical, from the best run
};

/// Loads the graph and runs optimize `repeats` times with seeds
/// seed, seed+1, ... Node/edge counts that disagree with the published
/// figures for a recognized dataset become report warnings, never errors.
BenchmarkResult run_benchmark(const BenchmarkConfig& config);

}  // namespace netclust

#endif  // NETCLUST_BENCHMARK_HPP
