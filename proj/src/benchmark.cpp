#include "netclust/benchmark.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace netclust {

BenchmarkResult run_benchmark(const BenchmarkConfig& config) {
    if (config.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    validate(config.params);

    BenchmarkResult result{Report{}, load_graph_file(config.input_path, config.format), Partition{}};
    const Graph& graph = result.loaded.graph;
    Report& report = result.report;

    report.dataset = config.dataset_name.empty() ? dataset_name_from_path(config.input_path)
                                                 : config.dataset_name;
    report.nodes = graph.node_count();
    report.edges = static_cast<int>(graph.edge_count());
    report.expected = dataset_expectation(report.dataset);
    report.params = config.params;
    report.repeats = config.repeats;
    report.workers = config.workers;

    if (report.expected &&
        (report.expected->nodes != report.nodes || report.expected->edges != report.edges)) {
        std::ostringstream warning;
        warning << "dataset '" << report.dataset << "' has " << report.nodes << " nodes and "
                << report.edges << " edges; published figures are " << report.expected->nodes
                << " and " << report.expected->edges;
        report.warnings.push_back(warning.str());
    }
    if (result.loaded.warnings.duplicate_edges > 0) {
        std::ostringstream warning;
        warning << "input collapsed " << result.loaded.warnings.duplicate_edges
                << " duplicate edge(s)";
        report.warnings.push_back(warning.str());
    }
    if (result.loaded.warnings.ignored_weights > 0) {
        std::ostringstream warning;
        warning << "input carried " << result.loaded.warnings.ignored_weights
                << " edge weight(s); weights are ignored";
        report.warnings.push_back(warning.str());
    }

    for (int r = 0; r < config.repeats; ++r) {
        GsoParams params = config.params;
        params.seed = config.params.seed + static_cast<std::uint64_t>(r);
        const auto started = std::chrono::steady_clock::now();
        RunResult run = optimize(graph, params, config.workers);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

        RunRecord record;
        record.seed = params.seed;
        record.best_q = run.best_q;
        record.communities = community_count(run.best_partition);
        record.iterations_run = run.iterations_run;
        record.evaluations = run.evaluations;
        record.wall_time_seconds = elapsed.count();
        report.runs.push_back(record);

        if (r == 0 || run.best_q > report.aggregate.best_q) {
            report.aggregate.best_q = run.best_q;
            result.best_partition = std::move(run.best_partition);
        }
    }
    double sum = 0.0;
    for (const auto& run : report.runs) sum += run.best_q;
    const double mean = sum / config.repeats;
    double sq_dev = 0.0;
    for (const auto& run : report.runs) sq_dev += (run.best_q - mean) * (run.best_q - mean);
    report.aggregate.mean_q = mean;
    report.aggregate.std_q = std::sqrt(sq_dev / config.repeats);
    return result;
}

}  // namespace netclust
