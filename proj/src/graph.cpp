#include "netclust/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netclust {

Graph Graph::from_edges(NodeId n, std::vector<Edge> edges) {
    if (n < 1) {
        throw std::invalid_argument("graph must have at least one node");
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                        ", " + std::to_string(v) + "}");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("duplicate edge in edge list");
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);

    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges_) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (NodeId v = 0; v < n; ++v) {
        g.offsets_[static_cast<std::size_t>(v) + 1] =
            g.offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    }
    g.adj_.resize(g.offsets_.back());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : g.edges_) {
        g.adj_[cursor[static_cast<std::size_t>(u)]++] = v;
        g.adj_[cursor[static_cast<std::size_t>(v)]++] = u;
    }
    // Edges are sorted, so each adjacency list comes out sorted as well.
    return g;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("node " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
    }
    const auto begin = offsets_[static_cast<std::size_t>(v)];
    const auto end = offsets_[static_cast<std::size_t>(v) + 1];
    return {adj_.data() + begin, end - begin};
}

int Graph::degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }

}  // namespace netclust
