#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "netclust/benchmark.hpp"
#include "netclust/dot_export.hpp"
#include "netclust/graph_io.hpp"
#include "netclust/gso.hpp"
#include "netclust/oracle.hpp"
#include "netclust/report.hpp"

namespace {

using namespace netclust;

InputFormat resolve_format(const std::string& flag, const std::string& path) {
    if (flag == "gml") return InputFormat::gml;
    if (flag == "edgelist") return InputFormat::edgelist;
    const auto ext = std::filesystem::path(path).extension().string();
    return ext == ".gml" ? InputFormat::gml : InputFormat::edgelist;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

void print_communities(std::ostream& out, const Partition& partition,
                       const std::vector<std::int64_t>& original_ids) {
    const Partition canonical = canonicalize(partition);
    const int k = community_count(canonical);
    for (Label c = 0; c < k; ++c) {
        out << "community " << c << ":";
        for (std::size_t v = 0; v < canonical.labels.size(); ++v) {
            if (canonical.labels[v] == c) {
                out << ' ' << (original_ids.empty() ? static_cast<std::int64_t>(v) : original_ids[v]);
            }
        }
        out << '\n';
    }
}

struct RunOptions {
    std::string input;
    std::string format = "auto";
    GsoParams params;
    bool auto_seed = false;
    bool seed_given = false;
    int repeats = 1;
    int workers = 1;
    std::string report_path;
    std::string report_format = "json";
    std::string dot_path;
};

int run_command(RunOptions& opt) {
    if (!opt.seed_given && !opt.auto_seed) {
        std::cerr << "error: benchmark runs need an explicit --seed "
                     "(pass --auto-seed for exploratory runs)\n";
        return 2;
    }
    if (opt.auto_seed && !opt.seed_given) {
        std::random_device device;
        opt.params.seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
        std::cout << "auto-seed: " << opt.params.seed << "\n";
    }

    BenchmarkConfig config;
    config.input_path = opt.input;
    config.format = resolve_format(opt.format, opt.input);
    config.params = opt.params;
    config.repeats = opt.repeats;
    config.workers = opt.workers;

    const BenchmarkResult result = run_benchmark(config);
    const Report& report = result.report;

    std::cout << "dataset: " << report.dataset << " (" << report.nodes << " nodes, "
              << report.edges << " edges)\n";
    for (const auto& warning : report.warnings) {
        std::cout << "warning: " << warning << "\n";
    }
    std::cout << std::setprecision(10);
    for (const auto& run : report.runs) {
        std::cout << "seed " << run.seed << ": Q = " << run.best_q << " ("
                  << run.communities << " communities, " << run.iterations_run
                  << " iterations, " << std::setprecision(3) << run.wall_time_seconds
                  << std::setprecision(10) << " s)\n";
    }
    std::cout << "best Q = " << report.aggregate.best_q << ", mean Q = "
              << report.aggregate.mean_q << ", std = " << report.aggregate.std_q << "\n";

    if (!opt.report_path.empty()) {
        write_file(opt.report_path, opt.report_format == "csv" ? report_to_csv(report)
                                                               : report_to_json(report));
        std::cout << "report written to " << opt.report_path << "\n";
    }
    if (!opt.dot_path.empty()) {
        write_file(opt.dot_path, export_dot(result.loaded.graph, result.best_partition,
                                            result.loaded.original_ids));
        std::cout << "dot written to " << opt.dot_path << "\n";
    }
    return 0;
}

struct OracleOptions {
    std::string input;
    std::string format = "auto";
    bool greedy = false;
};

int oracle_command(const OracleOptions& opt) {
    const LoadedGraph loaded = load_graph_file(opt.input, resolve_format(opt.format, opt.input));
    const OracleResult result = opt.greedy ? greedy_baseline(loaded.graph)
                                           : brute_force_max_modularity(loaded.graph);
    std::cout << std::setprecision(17);
    std::cout << (opt.greedy ? "greedy Q = " : "Q_star = ") << result.q << "\n";
    print_communities(std::cout, result.partition, loaded.original_ids);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection on undirected graphs by modularity-maximizing group search"};
    app.require_subcommand(1);

    RunOptions run;
    CLI::App* run_cmd = app.add_subcommand("run", "Run the optimizer and report modularity");
    run_cmd->add_option("--input", run.input, "Graph file")->required();
    run_cmd->add_option("--format", run.format, "Input format (gml|edgelist); inferred from the extension by default")
        ->check(CLI::IsMember({"auto", "gml", "edgelist"}));
    run_cmd->add_option("--group-size", run.params.group_size, "Members in the group")->capture_default_str();
    run_cmd->add_option("--iterations", run.params.iterations, "Search iterations")->capture_default_str();
    run_cmd->add_option("--ranger-fraction", run.params.ranger_fraction,
                        "Fraction of non-producers acting as rangers")->capture_default_str();
    run_cmd->add_option("--patience", run.params.patience,
                        "Failed producer scans before retreating to the anchored position")->capture_default_str();
    run_cmd->add_option("--scan-count", run.params.producer_scan_count,
                        "Candidate triples per producer scan")->capture_default_str();
    run_cmd->add_option("--beta", run.params.scrounger_copy_prob,
                        "Per-position probability a scrounger copies the producer")->capture_default_str();
    run_cmd->add_option("--ranger-rate", run.params.ranger_walk_rate,
                        "Per-node mutation probability of a ranger walk")->capture_default_str();
    run_cmd->add_option("--neighbor-prob", run.params.neighbor_move_prob,
                        "Probability a reassigned node adopts a neighbor's label")->capture_default_str();
    run_cmd->add_option("--kmax", run.params.k_max,
                        "Label-space size (0 uses the node count)")->capture_default_str();
    run_cmd->add_option("--seed", run.params.seed, "Master seed (required unless --auto-seed)");
    run_cmd->add_flag("--auto-seed", run.auto_seed, "Draw a seed and print it");
    run_cmd->add_option("--repeats", run.repeats, "Independent runs with seeds seed, seed+1, ...")->capture_default_str();
    run_cmd->add_option("--workers", run.workers, "Threads for member updates")->capture_default_str();
    run_cmd->add_option("--stagnation", run.params.stagnation_limit,
                        "Stop after this many non-improving iterations (0 disables)")->capture_default_str();
    run_cmd->add_option("--report", run.report_path, "Write the run report to this path");
    run_cmd->add_option("--report-format", run.report_format, "Report format")->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    run_cmd->add_option("--dot", run.dot_path, "Write the best partition as DOT to this path");

    OracleOptions oracle;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "Exhaustive modularity maximum for small graphs");
    oracle_cmd->add_option("--input", oracle.input, "Graph file")->required();
    oracle_cmd->add_option("--format", oracle.format, "Input format (gml|edgelist)")
        ->check(CLI::IsMember({"auto", "gml", "edgelist"}));
    oracle_cmd->add_flag("--greedy", oracle.greedy, "Report the greedy merge baseline instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            run.seed_given = run_cmd->count("--seed") > 0;
            return run_command(run);
        }
        return oracle_command(oracle);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
