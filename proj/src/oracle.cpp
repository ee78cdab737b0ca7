#include "netclust/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "netclust/modularity.hpp"

namespace netclust {

PartitionIterator::PartitionIterator(int n) : n_(n) {
    if (n < 1 || n > 14) {
        throw std::invalid_argument("partition enumeration supports 1 to 14 elements");
    }
    labels_.assign(n_, 0);
    max_prefix_.assign(n_, 0);
    max_prefix_[0] = -1;
}

bool PartitionIterator::next(std::vector<Label>& labels) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        labels = labels_;
        return true;
    }
    // Lexicographic successor of a restricted growth string: bump the
    // rightmost position that may grow, zero the tail.
    int i = n_ - 1;
    for (; i >= 1; --i) {
        if (labels_[i] <= max_prefix_[i]) break;
    }
    if (i < 1) {
        done_ = true;
        return false;
    }
    ++labels_[i];
    for (int j = i + 1; j < n_; ++j) {
        max_prefix_[j] = std::max(max_prefix_[j - 1], labels_[j - 1]);
        labels_[j] = 0;
    }
    labels = labels_;
    return true;
}

PartitionIterator enumerate_partitions(int n) { return PartitionIterator(n); }

OracleResult brute_force_max_modularity(const Graph& graph) {
    const auto n = graph.node_count();
    if (n < 1 || n > 12) {
        throw std::invalid_argument("brute-force maximization supports 1 to 12 nodes");
    }
    if (graph.edge_count() == 0) {
        throw std::domain_error("modularity is undefined for a graph with no edges");
    }
    PartitionIterator it(n);
    Partition current;
    OracleResult best;
    bool have = false;
    while (it.next(current.labels)) {
        const double q = modularity(graph, current);
        if (!have || q > best.q) {
            best.q = q;
            best.partition = current;
            have = true;
        }
    }
    return best;
}

OracleResult greedy_baseline(const Graph& graph) {
    if (graph.edge_count() == 0) {
        throw std::domain_error("modularity is undefined for a graph with no edges");
    }
    const int n = graph.node_count();
    const double m = static_cast<double>(graph.edge_count());

    std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
    std::vector<double> a(n, 0.0);
    for (const auto& [u, v] : graph.edges()) {
        e[u][v] += 0.5 / m;
        e[v][u] += 0.5 / m;
    }
    for (int i = 0; i < n; ++i) a[i] = graph.degree(i) / (2.0 * m);

    std::vector<Label> assign(n);
    std::iota(assign.begin(), assign.end(), 0);
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);

    while (active.size() > 1) {
        double best_delta = 0.0;
        int best_i = -1;
        int best_j = -1;
        for (std::size_t x = 0; x < active.size(); ++x) {
            for (std::size_t y = x + 1; y < active.size(); ++y) {
                const int i = active[x];
                const int j = active[y];
                const double delta = 2.0 * (e[i][j] - a[i] * a[j]);
                if (delta > best_delta) {
                    best_delta = delta;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i < 0) break;
        for (int k : active) {
            if (k == best_i || k == best_j) continue;
            e[best_i][k] += e[best_j][k];
            e[k][best_i] = e[best_i][k];
        }
        e[best_i][best_i] += 2.0 * e[best_i][best_j] + e[best_j][best_j];
        a[best_i] += a[best_j];
        active.erase(std::find(active.begin(), active.end(), best_j));
        for (auto& label : assign) {
            if (label == best_j) label = best_i;
        }
    }

    OracleResult result;
    result.partition = canonicalize(Partition{assign});
    result.q = modularity(graph, result.partition);
    return result;
}

}  // namespace netclust
