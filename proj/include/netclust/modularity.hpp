#ifndef NETCLUST_MODULARITY_HPP
#define NETCLUST_MODULARITY_HPP

#include <vector>

#include "netclust/graph.hpp"
#include "netclust/partition.hpp"

namespace netclust {

/// K x K symmetric matrix of edge fractions between communities.
///
/// edge_fraction(i, i) is the fraction of all edges internal to community
/// i; a cross edge between communities i and j contributes 1/(2 m) to each
/// of edge_fraction(i, j) and edge_fraction(j, i), so the entries sum to 1.
/// Rows are indexed by the nonempty communities in ascending label order.
struct ModulesMatrix {
    int community_count = 0;
    std::vector<double> edge_fraction;  ///< row-major, community_count^2 entries
    std::vector<double> row_sum;        ///< a_i, the row sums

    double at(int i, int j) const {
        return edge_fraction[static_cast<std::size_t>(i) *
                                 static_cast<std::size_t>(community_count) +
                             static_cast<std::size_t>(j)];
    }
};

/// Builds the modules matrix of a partition. Throws std::domain_error on a
/// graph without edges, std::invalid_argument on a length mismatch or
/// negative label.
ModulesMatrix modules_matrix(const Graph& graph, const Partition& partition);

/// Modularity Q = sum_i (e_ii - a_i^2), evaluated directly from the
/// edge list without building the matrix. Same preconditions as
/// modules_matrix. Result is in [-1, 1).
double modularity(const Graph& graph, const Partition& partition);

/// Q evaluated from an already-built matrix as sum_i (e_ii - a_i^2).
double modularity_from_matrix(const ModulesMatrix& mm);

/// Q evaluated as Tr(e) - ||e*e|| with a literal matrix product, where
/// ||x|| is the sum of all elements of x. Agrees with the row-sum form to
/// floating-point accuracy; kept as an independent route for checks.
double modularity_trace_form(const ModulesMatrix& mm);

/// Change in Q when node v moves to new_label, computed from v's incident
/// edges and the two affected communities without a full re-evaluation.
double delta_modularity(const Graph& graph, const Partition& partition, NodeId v,
                        Label new_label);

}  // namespace netclust

#endif  // NETCLUST_MODULARITY_HPP
