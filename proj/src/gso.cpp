#include "netclust/gso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

#include "netclust/modularity.hpp"

namespace netclust {

namespace {

int effective_k_max(const GsoParams& params, const Graph& graph) {
    return params.k_max > 0 ? params.k_max : static_cast<int>(graph.node_count());
}

int argmax_fitness(const std::vector<Member>& members) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(members.size()); ++i) {
        if (members[i].fitness > members[best].fitness) best = i;
    }
    return best;
}

// Assigns roles among non-producers: a partial shuffle picks the rangers,
// everyone else scrounges.
void assign_roles(Group& group, const GsoParams& params, Rng& rng) {
    const int m = static_cast<int>(group.members.size());
    std::vector<int> others;
    others.reserve(m - 1);
    for (int i = 0; i < m; ++i) {
        if (i != group.producer_index) others.push_back(i);
    }
    const int ranger_count =
        static_cast<int>(std::lround(params.ranger_fraction * (m - 1)));
    for (int i = 0; i < ranger_count; ++i) {
        const int j = i + rng.uniform_int(static_cast<std::int32_t>(others.size()) - i);
        std::swap(others[i], others[j]);
    }
    group.members[group.producer_index].role = Role::producer;
    for (int i = 0; i < static_cast<int>(others.size()); ++i) {
        group.members[others[i]].role = i < ranger_count ? Role::ranger : Role::scrounger;
    }
}

void update_member(const Graph& graph, Member& member, const Member& producer_snapshot,
                   const GsoParams& params, Rng rng, std::uint64_t& evaluations) {
    if (member.role == Role::scrounger) {
        member = scrounge(graph, member, producer_snapshot, params, rng, evaluations);
    } else {
        member = ranger_walk(graph, member, params, rng, evaluations);
    }
}

}  // namespace

void validate(const GsoParams& params) {
    if (params.group_size < 3) throw std::invalid_argument("group_size must be at least 3");
    if (params.iterations < 1) throw std::invalid_argument("iterations must be at least 1");
    if (params.ranger_fraction < 0.0 || params.ranger_fraction >= 1.0)
        throw std::invalid_argument("ranger_fraction must lie in [0, 1)");
    if (params.patience < 1) throw std::invalid_argument("patience must be at least 1");
    if (params.producer_scan_count < 1)
        throw std::invalid_argument("producer_scan_count must be at least 1");
    for (double rate : params.scan_rates) {
        if (rate <= 0.0 || rate > 1.0)
            throw std::invalid_argument("scan rates must lie in (0, 1]");
    }
    if (params.scrounger_copy_prob <= 0.0 || params.scrounger_copy_prob > 1.0)
        throw std::invalid_argument("scrounger_copy_prob must lie in (0, 1]");
    if (params.ranger_walk_rate <= 0.0 || params.ranger_walk_rate > 1.0)
        throw std::invalid_argument("ranger_walk_rate must lie in (0, 1]");
    if (params.neighbor_move_prob < 0.0 || params.neighbor_move_prob > 1.0)
        throw std::invalid_argument("neighbor_move_prob must lie in [0, 1]");
    if (params.k_max < 0) throw std::invalid_argument("k_max must be non-negative");
    if (params.stagnation_limit < 0)
        throw std::invalid_argument("stagnation_limit must be non-negative");
}

Partition mutate_partition(const Graph& graph, const Partition& base, double rate,
                           int k_max, double neighbor_move_prob, Rng& rng) {
    Partition out = base;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (!rng.bernoulli(rate)) continue;
        const auto adj = graph.neighbors(v);
        if (!adj.empty() && rng.bernoulli(neighbor_move_prob)) {
            const NodeId pick = adj[rng.uniform_int(static_cast<std::int32_t>(adj.size()))];
            out.labels[v] = base.labels[pick];
        } else {
            out.labels[v] = rng.uniform_int(k_max);
        }
    }
    return out;
}

Member producer_scan(const Graph& graph, const Member& producer, PatienceState& patience,
                     const GsoParams& params, Rng& rng, std::uint64_t& evaluations) {
    const int k_max = effective_k_max(params, graph);
    Partition best_candidate;
    double best_q = 0.0;
    bool have_candidate = false;
    for (int s = 0; s < params.producer_scan_count; ++s) {
        for (double rate : params.scan_rates) {
            Partition candidate = mutate_partition(graph, producer.position, rate, k_max,
                                                   params.neighbor_move_prob, rng);
            const double q = modularity(graph, candidate);
            ++evaluations;
            if (!have_candidate || q > best_q) {
                best_q = q;
                best_candidate = std::move(candidate);
                have_candidate = true;
            }
        }
    }
    if (have_candidate && best_q > producer.fitness) {
        patience.counter = 0;
        return Member{std::move(best_candidate), best_q, Role::producer};
    }
    if (patience.counter == 0) patience.anchor = producer.position;
    ++patience.counter;
    Member out = producer;
    if (patience.counter >= params.patience) {
        // The anchor equals the current position (failed scans never move the
        // producer), so the cached fitness stays valid.
        out.position = patience.anchor;
        patience.counter = 0;
    }
    return out;
}

Member scrounge(const Graph& graph, const Member& member, const Member& producer,
                const GsoParams& params, Rng& rng, std::uint64_t& evaluations) {
    Member out = member;
    for (std::size_t i = 0; i < out.position.labels.size(); ++i) {
        if (rng.bernoulli(params.scrounger_copy_prob)) {
            out.position.labels[i] = producer.position.labels[i];
        }
    }
    out.fitness = modularity(graph, out.position);
    ++evaluations;
    return out;
}

Member ranger_walk(const Graph& graph, const Member& member, const GsoParams& params,
                   Rng& rng, std::uint64_t& evaluations) {
    Member out = member;
    out.position = mutate_partition(graph, member.position, params.ranger_walk_rate,
                                    effective_k_max(params, graph),
                                    params.neighbor_move_prob, rng);
    out.fitness = modularity(graph, out.position);
    ++evaluations;
    return out;
}

Group init_group(const Graph& graph, const GsoParams& params, const RngStreams& streams,
                 std::uint64_t& evaluations) {
    validate(params);
    const int m = params.group_size;
    const int k_max = effective_k_max(params, graph);
    Group group;
    group.members.resize(m);
    for (int i = 0; i < m; ++i) {
        Rng rng = streams.stream(RngStreams::init_iteration, static_cast<std::uint64_t>(i));
        Partition position;
        position.labels.resize(graph.node_count());
        for (auto& label : position.labels) label = rng.uniform_int(k_max);
        const double q = modularity(graph, position);
        ++evaluations;
        group.members[i] = Member{std::move(position), q, Role::scrounger};
    }
    group.producer_index = argmax_fitness(group.members);
    Rng role_rng = streams.stream(RngStreams::init_iteration, static_cast<std::uint64_t>(m));
    assign_roles(group, params, role_rng);
    const Member& producer = group.members[group.producer_index];
    group.best_ever = BestRecord{producer.fitness, producer.position};
    return group;
}

void step(const Graph& graph, Group& group, const GsoParams& params,
          const RngStreams& streams, std::uint64_t& evaluations, int workers) {
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    const auto iteration = static_cast<std::uint64_t>(group.iteration);
    const int m = static_cast<int>(group.members.size());

    Rng producer_rng = streams.stream(iteration, static_cast<std::uint64_t>(group.producer_index));
    Member& producer = group.members[group.producer_index];
    producer = producer_scan(graph, producer, group.patience, params, producer_rng, evaluations);

    const Member producer_snapshot = producer;
    std::vector<int> follower_indices;
    follower_indices.reserve(m - 1);
    for (int i = 0; i < m; ++i) {
        if (i != group.producer_index) follower_indices.push_back(i);
    }
    if (workers == 1 || static_cast<int>(follower_indices.size()) <= 1) {
        for (int i : follower_indices) {
            update_member(graph, group.members[i], producer_snapshot, params,
                          streams.stream(iteration, static_cast<std::uint64_t>(i)), evaluations);
        }
    } else {
        const int thread_count = std::min<int>(workers, static_cast<int>(follower_indices.size()));
        std::vector<std::uint64_t> thread_evals(thread_count, 0);
        std::vector<std::thread> threads;
        threads.reserve(thread_count);
        for (int t = 0; t < thread_count; ++t) {
            threads.emplace_back([&, t] {
                for (std::size_t k = t; k < follower_indices.size();
                     k += static_cast<std::size_t>(thread_count)) {
                    const int i = follower_indices[k];
                    update_member(graph, group.members[i], producer_snapshot, params,
                                  streams.stream(iteration, static_cast<std::uint64_t>(i)),
                                  thread_evals[t]);
                }
            });
        }
        for (auto& thread : threads) thread.join();
        for (std::uint64_t e : thread_evals) evaluations += e;
    }

    const int new_producer = argmax_fitness(group.members);
    if (new_producer != group.producer_index) {
        group.patience = PatienceState{};
    }
    group.producer_index = new_producer;
    Rng role_rng = streams.stream(iteration, static_cast<std::uint64_t>(m));
    assign_roles(group, params, role_rng);

    const Member& best_member = group.members[group.producer_index];
    if (best_member.fitness > group.best_ever.q) {
        group.best_ever = BestRecord{best_member.fitness, best_member.position};
    }
    ++group.iteration;
}

RunResult optimize(const Graph& graph, const GsoParams& params, int workers) {
    validate(params);
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    const RngStreams streams(params.seed);
    RunResult result;
    Group group = init_group(graph, params, streams, result.evaluations);
    result.trace.reserve(params.iterations);
    double stagnation_baseline = group.best_ever.q;
    int stagnant = 0;
    for (int t = 0; t < params.iterations; ++t) {
        step(graph, group, params, streams, result.evaluations, workers);
        result.trace.push_back(group.best_ever.q);
        if (params.stagnation_limit > 0) {
            if (group.best_ever.q > stagnation_baseline) {
                stagnation_baseline = group.best_ever.q;
                stagnant = 0;
            } else if (++stagnant >= params.stagnation_limit) {
                break;
            }
        }
    }
    result.iterations_run = static_cast<int>(result.trace.size());
    result.best_q = group.best_ever.q;
    result.best_partition = canonicalize(group.best_ever.partition);
    return result;
}

}  // namespace netclust
