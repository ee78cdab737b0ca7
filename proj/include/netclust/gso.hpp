#ifndef NETCLUST_GSO_HPP
#define NETCLUST_GSO_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "netclust/graph.hpp"
#include "netclust/partition.hpp"
#include "netclust/rng.hpp"

namespace netclust {

enum class Role { producer, scrounger, ranger };

struct GsoParams {
    int group_size = 60;
    int iterations = 2000;
    double ranger_fraction = 0.2;
    int patience = 5;
    int producer_scan_count = 1;
    std::array<double, 3> scan_rates{0.02, 0.05, 0.10};
    double scrounger_copy_prob = 0.7;
    double ranger_walk_rate = 0.1;
    double neighbor_move_prob = 0.5;
    int k_max = 0;  // 0 selects the node count
    std::uint64_t seed = 0;
    int stagnation_limit = 0;  // 0 disables early stopping

    bool operator==(const GsoParams&) const = default;
};

/// Throws std::invalid_argument when any field is out of range.
void validate(const GsoParams& params);

struct Member {
    Partition position;
    double fitness = 0.0;
    Role role = Role::scrounger;

    bool operator==(const Member&) const = default;
};

struct BestRecord {
    double q = 0.0;
    Partition partition;
};

struct PatienceState {
    int counter = 0;
    Partition anchor;  // producer position when the counter left zero
};

struct Group {
    std::vector<Member> members;
    int producer_index = 0;
    BestRecord best_ever;
    PatienceState patience;
    int iteration = 0;  // completed steps
};

struct RunResult {
    double best_q = 0.0;
    Partition best_partition;    // canonical labels
    std::vector<double> trace;   // best-so-far Q after each iteration
    int iterations_run = 0;
    std::uint64_t evaluations = 0;
};

/// Returns a copy of `base` where each node is independently reassigned with
/// probability `rate`: with probability `neighbor_move_prob` the node adopts
/// the label of a uniformly chosen neighbor (uniform fallback when isolated),
/// otherwise a uniform label in [0, k_max).
Partition mutate_partition(const Graph& graph, const Partition& base, double rate,
                           int k_max, double neighbor_move_prob, Rng& rng);

/// One producer scanning bout: producer_scan_count candidate triples, one per
/// scan rate. Returns the best strictly improving candidate and resets the
/// patience counter, or the unchanged producer with the counter advanced.
/// At `patience` consecutive failures the anchored position is restored.
Member producer_scan(const Graph& graph, const Member& producer, PatienceState& patience,
                     const GsoParams& params, Rng& rng, std::uint64_t& evaluations);

/// Copies each label position from the producer with probability
/// scrounger_copy_prob, then re-evaluates fitness.
Member scrounge(const Graph& graph, const Member& member, const Member& producer,
                const GsoParams& params, Rng& rng, std::uint64_t& evaluations);

/// Random walk: mutate_partition at ranger_walk_rate, accepted unconditionally.
Member ranger_walk(const Graph& graph, const Member& member, const GsoParams& params,
                   Rng& rng, std::uint64_t& evaluations);

/// Draws group_size uniform members, evaluates them, picks the producer
/// (argmax fitness, lowest index on ties) and splits the rest into
/// round(ranger_fraction * (group_size - 1)) rangers and scroungers.
Group init_group(const Graph& graph, const GsoParams& params, const RngStreams& streams,
                 std::uint64_t& evaluations);

/// One iteration: producer scan, scrounging, ranging, producer re-selection,
/// ranger re-draw, best_ever update. Member updates may run on `workers`
/// threads; results are identical for any worker count.
void step(const Graph& graph, Group& group, const GsoParams& params,
          const RngStreams& streams, std::uint64_t& evaluations, int workers = 1);

/// Full run: init_group then `iterations` steps (early stop after
/// stagnation_limit non-improving iterations when configured).
/// Deterministic for fixed (graph, params), independent of worker count.
RunResult optimize(const Graph& graph, const GsoParams& params, int workers = 1);

}  // namespace netclust

#endif  // NETCLUST_GSO_HPP
