#ifndef NETCLUST_ORACLE_HPP
#define NETCLUST_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "netclust/graph.hpp"
#include "netclust/partition.hpp"

namespace netclust {

/// Enumerates every set partition of [0, n) exactly once as a restricted
/// growth string (canonical labels), in lexicographic order.
///
///   PartitionIterator it(n);
///   while (it.next(labels)) { ... }
class PartitionIterator {
public:
    /// n must lie in [1, 14]; throws std::invalid_argument otherwise.
    explicit PartitionIterator(int n);

    /// Writes the next partition into `labels` and returns true, or returns
    /// false when the sequence is exhausted.
    bool next(std::vector<Label>& labels);

private:
    int n_;
    bool done_ = false;
    bool first_ = true;
    std::vector<Label> labels_;
    std::vector<Label> max_prefix_;  // max_prefix_[i] = max(labels_[0..i-1]), max_prefix_[0] = -1
};

PartitionIterator enumerate_partitions(int n);

struct OracleResult {
    double q = 0.0;
    Partition partition;
};

/// Exhaustive argmax of modularity over all partitions. Requires
/// 1 <= node_count <= 12 and at least one edge; ties resolve to the first
/// partition in enumeration order.
OracleResult brute_force_max_modularity(const Graph& graph);

/// Agglomerative baseline: start from singletons and repeatedly apply the
/// largest-gain pair merge while some merge still increases Q.
OracleResult greedy_baseline(const Graph& graph);

}  // namespace netclust

#endif  // NETCLUST_ORACLE_HPP
