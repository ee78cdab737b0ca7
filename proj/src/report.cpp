#include "netclust/report.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace netclust {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view schema_id = "netclust-report-v1";

json params_to_json(const GsoParams& p) {
    return json{{"group_size", p.group_size},
                {"iterations", p.iterations},
                {"ranger_fraction", p.ranger_fraction},
                {"patience", p.patience},
                {"producer_scan_count", p.producer_scan_count},
                {"scan_rates", p.scan_rates},
                {"scrounger_copy_prob", p.scrounger_copy_prob},
                {"ranger_walk_rate", p.ranger_walk_rate},
                {"neighbor_move_prob", p.neighbor_move_prob},
                {"k_max", p.k_max},
                {"seed", p.seed},
                {"stagnation_limit", p.stagnation_limit}};
}

GsoParams params_from_json(const json& j) {
    GsoParams p;
    p.group_size = j.at("group_size").get<int>();
    p.iterations = j.at("iterations").get<int>();
    p.ranger_fraction = j.at("ranger_fraction").get<double>();
    p.patience = j.at("patience").get<int>();
    p.producer_scan_count = j.at("producer_scan_count").get<int>();
    p.scan_rates = j.at("scan_rates").get<std::array<double, 3>>();
    p.scrounger_copy_prob = j.at("scrounger_copy_prob").get<double>();
    p.ranger_walk_rate = j.at("ranger_walk_rate").get<double>();
    p.neighbor_move_prob = j.at("neighbor_move_prob").get<double>();
    p.k_max = j.at("k_max").get<int>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.stagnation_limit = j.at("stagnation_limit").get<int>();
    return p;
}

// Shortest representation that parses back to the same double.
std::string fmt(double x) { return json(x).dump(); }

}  // namespace

std::optional<DatasetExpectation> dataset_expectation(std::string_view name) {
    if (name == "karate") return DatasetExpectation{34, 78};
    if (name == "dolphins") return DatasetExpectation{62, 159};
    if (name == "jazz") return DatasetExpectation{196, 2742};
    if (name == "football") return DatasetExpectation{115, 615};
    if (name == "lesmis") return DatasetExpectation{77, 254};
    return std::nullopt;
}

std::string dataset_name_from_path(std::string_view path) {
    std::string stem = std::filesystem::path(path).stem().string();
    std::transform(stem.begin(), stem.end(), stem.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return stem;
}

std::string report_to_json(const Report& report) {
    json j;
    j["schema"] = schema_id;
    j["dataset"] = report.dataset;
    j["nodes"] = report.nodes;
    j["edges"] = report.edges;
    if (report.expected) {
        j["expected"] = json{{"nodes", report.expected->nodes}, {"edges", report.expected->edges}};
    } else {
        j["expected"] = nullptr;
    }
    j["warnings"] = report.warnings;
    j["params"] = params_to_json(report.params);
    j["repeats"] = report.repeats;
    j["workers"] = report.workers;
    j["runs"] = json::array();
    for (const auto& run : report.runs) {
        j["runs"].push_back(json{{"seed", run.seed},
                                 {"best_q", run.best_q},
                                 {"communities", run.communities},
                                 {"iterations_run", run.iterations_run},
                                 {"evaluations", run.evaluations},
                                 {"wall_time_seconds", run.wall_time_seconds}});
    }
    j["aggregate"] = json{{"best_q", report.aggregate.best_q},
                          {"mean_q", report.aggregate.mean_q},
                          {"std_q", report.aggregate.std_q}};
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("schema").get<std::string>() != schema_id) {
            throw std::runtime_error("unrecognized report schema");
        }
        Report report;
        report.dataset = j.at("dataset").get<std::string>();
        report.nodes = j.at("nodes").get<int>();
        report.edges = j.at("edges").get<int>();
        if (!j.at("expected").is_null()) {
            report.expected = DatasetExpectation{j["expected"].at("nodes").get<int>(),
                                                 j["expected"].at("edges").get<int>()};
        }
        report.warnings = j.at("warnings").get<std::vector<std::string>>();
        report.params = params_from_json(j.at("params"));
        report.repeats = j.at("repeats").get<int>();
        report.workers = j.at("workers").get<int>();
        for (const auto& r : j.at("runs")) {
            RunRecord run;
            run.seed = r.at("seed").get<std::uint64_t>();
            run.best_q = r.at("best_q").get<double>();
            run.communities = r.at("communities").get<int>();
            run.iterations_run = r.at("iterations_run").get<int>();
            run.evaluations = r.at("evaluations").get<std::uint64_t>();
            run.wall_time_seconds = r.at("wall_time_seconds").get<double>();
            report.runs.push_back(run);
        }
        report.aggregate.best_q = j.at("aggregate").at("best_q").get<double>();
        report.aggregate.mean_q = j.at("aggregate").at("mean_q").get<double>();
        report.aggregate.std_q = j.at("aggregate").at("std_q").get<double>();
        return report;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("report shape mismatch: ") + e.what());
    }
}

std::string report_to_csv(const Report& report) {
    std::ostringstream out;
    out << "row_type,dataset,nodes,edges,seed,group_size,iterations,ranger_fraction,"
           "patience,producer_scan_count,scan_rate_1,scan_rate_2,scan_rate_3,"
           "scrounger_copy_prob,ranger_walk_rate,neighbor_move_prob,k_max,"
           "stagnation_limit,best_q,communities,iterations_run,evaluations,"
           "wall_time_seconds,mean_q,std_q\n";
    const GsoParams& p = report.params;
    const auto prefix = [&](std::ostream& os) {
        os << report.dataset << ',' << report.nodes << ',' << report.edges << ',';
    };
    const auto params_cols = [&](std::ostream& os) {
        os << p.group_size << ',' << p.iterations << ',' << fmt(p.ranger_fraction) << ','
           << p.patience << ',' << p.producer_scan_count << ',' << fmt(p.scan_rates[0]) << ','
           << fmt(p.scan_rates[1]) << ',' << fmt(p.scan_rates[2]) << ','
           << fmt(p.scrounger_copy_prob) << ',' << fmt(p.ranger_walk_rate) << ','
           << fmt(p.neighbor_move_prob) << ',' << p.k_max << ',' << p.stagnation_limit << ',';
    };
    for (const auto& run : report.runs) {
        out << "run,";
        prefix(out);
        out << run.seed << ',';
        params_cols(out);
        out << fmt(run.best_q) << ',' << run.communities << ',' << run.iterations_run << ','
            << run.evaluations << ',' << fmt(run.wall_time_seconds) << ",,\n";
    }
    out << "aggregate,";
    prefix(out);
    out << ',';
    params_cols(out);
    out << fmt(report.aggregate.best_q) << ",,,,," << fmt(report.aggregate.mean_q) << ','
        << fmt(report.aggregate.std_q) << "\n";
    return out.str();
}

}  // namespace netclust
