#ifndef NETCLUST_REPORT_HPP
#define NETCLUST_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netclust/gso.hpp"

namespace netclust {

/// Published node/edge counts for the five benchmark networks.
struct DatasetExpectation {
    int nodes = 0;
    int edges = 0;

    bool operator==(const DatasetExpectation&) const = default;
};

/// Lookup by dataset name (karate, dolphins, jazz, football, lesmis);
/// empty for unknown names.
std::optional<DatasetExpectation> dataset_expectation(std::string_view name);

/// Lowercased file stem, used as the default dataset name.
std::string dataset_name_from_path(std::string_view path);

struct RunRecord {
    std::uint64_t seed = 0;
    double best_q = 0.0;
    int communities = 0;
    int iterations_run = 0;
    std::uint64_t evaluations = 0;
    double wall_time_seconds = 0.0;

    bool operator==(const RunRecord&) const = default;
};

struct Aggregate {
    double best_q = 0.0;
    double mean_q = 0.0;
    double std_q = 0.0;

    bool operator==(const Aggregate&) const = default;
};

struct Report {
    std::string dataset;
    int nodes = 0;
    int edges = 0;
    std::optional<DatasetExpectation> expected;
    std::vector<std::string> warnings;
    GsoParams params;
    int repeats = 1;
    int workers = 1;
    std::vector<RunRecord> runs;
    Aggregate aggregate;

    bool operator==(const Report&) const = default;
};

/// Serializes under the frozen "netclust-report-v1" schema.
std::string report_to_json(const Report& report);

/// Parses report_to_json output; throws std::runtime_error on schema or
/// shape mismatches.
Report report_from_json(const std::string& text);

/// One header line, one row per run, one aggregate row. Column order is
/// frozen; see the README.
std::string report_to_csv(const Report& report);

}  // namespace netclust

#endif  // NETCLUST_REPORT_HPP
