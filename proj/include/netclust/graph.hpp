#ifndef NETCLUST_GRAPH_HPP
#define NETCLUST_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netclust {

/// Dense node index in [0, n).
using NodeId = std::int32_t;

/// Undirected edge with endpoints normalized so that first < second.
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph.
///
/// Nodes are dense integers in [0, n). Each edge is stored once with
/// endpoints ordered, and adjacency lists are sorted. The structure is
/// read-only after construction and safe to share across threads.
class Graph {
public:
    /// Builds a graph from an edge list over nodes [0, n).
    ///
    /// Throws std::invalid_argument on n < 1, endpoints out of range,
    /// self-loops, or duplicate edges.
    static Graph from_edges(NodeId n, std::vector<Edge> edges);

    NodeId node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// All edges, each unordered pair {u, v} exactly once with u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor list of v. Throws std::out_of_range on bad v.
    std::span<const NodeId> neighbors(NodeId v) const;

    /// Number of neighbors of v. Throws std::out_of_range on bad v.
    int degree(NodeId v) const;

private:
    Graph() = default;

    NodeId n_ = 0;
    std::vector<Edge> edges_;
    // CSR adjacency: neighbors of v are adj_[offsets_[v] .. offsets_[v + 1]).
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adj_;
};

}  // namespace netclust

#endif  // NETCLUST_GRAPH_HPP
