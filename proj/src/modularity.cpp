#include "netclust/modularity.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace netclust {

namespace {

void check_inputs(const Graph& graph, const Partition& partition) {
    if (graph.edge_count() == 0) {
        throw std::domain_error("modularity is undefined on a graph without edges");
    }
    if (partition.size() != static_cast<std::size_t>(graph.node_count())) {
        throw std::invalid_argument("partition length " + std::to_string(partition.size()) +
                                    " does not match node count " +
                                    std::to_string(graph.node_count()));
    }
    for (const Label l : partition.labels) {
        if (l < 0) {
            throw std::invalid_argument("negative community label");
        }
    }
}

Label max_label(const Partition& partition) {
    return *std::max_element(partition.labels.begin(), partition.labels.end());
}

}  // namespace

ModulesMatrix modules_matrix(const Graph& graph, const Partition& partition) {
    check_inputs(graph, partition);
    const std::size_t bound = static_cast<std::size_t>(max_label(partition)) + 1;

    // Map nonempty labels to dense rows in ascending label order.
    std::vector<int> row_of(bound, -1);
    for (const Label l : partition.labels) row_of[static_cast<std::size_t>(l)] = 0;
    int k = 0;
    for (std::size_t l = 0; l < bound; ++l) {
        if (row_of[l] == 0) row_of[l] = k++;
    }

    // Integer edge counts per community pair; cross pairs counted once.
    std::vector<std::int64_t> intra(static_cast<std::size_t>(k), 0);
    std::vector<std::int64_t> cross(static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
                                    0);
    for (const auto& [u, v] : graph.edges()) {
        const int cu = row_of[static_cast<std::size_t>(partition[static_cast<std::size_t>(u)])];
        const int cv = row_of[static_cast<std::size_t>(partition[static_cast<std::size_t>(v)])];
        if (cu == cv) {
            ++intra[static_cast<std::size_t>(cu)];
        } else {
            ++cross[static_cast<std::size_t>(cu) * static_cast<std::size_t>(k) +
                    static_cast<std::size_t>(cv)];
            ++cross[static_cast<std::size_t>(cv) * static_cast<std::size_t>(k) +
                    static_cast<std::size_t>(cu)];
        }
    }

    const double m = static_cast<double>(graph.edge_count());
    ModulesMatrix mm;
    mm.community_count = k;
    mm.edge_fraction.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const std::size_t idx =
                static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(j);
            mm.edge_fraction[idx] = i == j
                                        ? static_cast<double>(intra[static_cast<std::size_t>(i)]) / m
                                        : static_cast<double>(cross[idx]) / (2.0 * m);
        }
    }
    mm.row_sum.assign(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k; ++i) {
        double sum = 0.0;
        for (int j = 0; j < k; ++j) sum += mm.at(i, j);
        mm.row_sum[static_cast<std::size_t>(i)] = sum;
    }
    return mm;
}

double modularity(const Graph& graph, const Partition& partition) {
    check_inputs(graph, partition);
    const std::size_t bound = static_cast<std::size_t>(max_label(partition)) + 1;

    // Q = sum_c [ intra_c / m - (deg_c / 2m)^2 ] over nonempty communities,
    // where deg_c = 2*intra_c + cross_c is the sum of degrees in c.
    std::vector<std::int64_t> intra(bound, 0);
    std::vector<std::int64_t> deg_sum(bound, 0);
    for (const auto& [u, v] : graph.edges()) {
        const Label cu = partition[static_cast<std::size_t>(u)];
        const Label cv = partition[static_cast<std::size_t>(v)];
        if (cu == cv) ++intra[static_cast<std::size_t>(cu)];
        ++deg_sum[static_cast<std::size_t>(cu)];
        ++deg_sum[static_cast<std::size_t>(cv)];
    }

    const double m = static_cast<double>(graph.edge_count());
    double q = 0.0;
    for (std::size_t c = 0; c < bound; ++c) {
        if (deg_sum[c] == 0 && intra[c] == 0) continue;  // empty community
        const double a = static_cast<double>(deg_sum[c]) / (2.0 * m);
        q += static_cast<double>(intra[c]) / m - a * a;
    }
    return q;
}

double modularity_from_matrix(const ModulesMatrix& mm) {
    double q = 0.0;
    for (int i = 0; i < mm.community_count; ++i) {
        q += mm.at(i, i) -
             mm.row_sum[static_cast<std::size_t>(i)] * mm.row_sum[static_cast<std::size_t>(i)];
    }
    return q;
}

double modularity_trace_form(const ModulesMatrix& mm) {
    const int k = mm.community_count;
    double trace = 0.0;
    for (int i = 0; i < k; ++i) trace += mm.at(i, i);
    double squared_sum = 0.0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double prod = 0.0;
            for (int l = 0; l < k; ++l) prod += mm.at(i, l) * mm.at(l, j);
            squared_sum += prod;
        }
    }
    return trace - squared_sum;
}

double delta_modularity(const Graph& graph, const Partition& partition, NodeId v,
                        Label new_label) {
    check_inputs(graph, partition);
    if (v < 0 || v >= graph.node_count()) {
        throw std::out_of_range("node " + std::to_string(v) + " out of range");
    }
    if (new_label < 0) {
        throw std::invalid_argument("negative community label");
    }
    const Label old_label = partition[static_cast<std::size_t>(v)];
    if (new_label == old_label) return 0.0;

    // Degree mass of the two affected communities, with v still in old_label.
    std::int64_t deg_old = 0;
    std::int64_t deg_new = 0;
    for (NodeId u = 0; u < graph.node_count(); ++u) {
        const Label l = partition[static_cast<std::size_t>(u)];
        if (l == old_label) deg_old += graph.degree(u);
        if (l == new_label) deg_new += graph.degree(u);
    }
    // Edges from v into each of the two communities.
    std::int64_t to_old = 0;
    std::int64_t to_new = 0;
    for (const NodeId u : graph.neighbors(v)) {
        const Label l = partition[static_cast<std::size_t>(u)];
        if (l == old_label) ++to_old;
        if (l == new_label) ++to_new;
    }

    const double m = static_cast<double>(graph.edge_count());
    const double d = static_cast<double>(graph.degree(v));
    // Intra terms change by (to_new - to_old)/m; the a^2 terms change by
    // d*(deg_new - deg_old + d)/(2 m^2) with deg_new taken without v.
    return (static_cast<double>(to_new) - static_cast<double>(to_old)) / m -
           d * (static_cast<double>(deg_new) - static_cast<double>(deg_old) + d) /
               (2.0 * m * m);
}

}  // namespace netclust
