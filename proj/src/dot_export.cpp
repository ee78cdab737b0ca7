#include "netclust/dot_export.hpp"

#include <sstream>
#include <stdexcept>

namespace netclust {

std::string export_dot(const Graph& graph, const Partition& partition,
                       const std::vector<std::int64_t>& original_ids) {
    const auto n = graph.node_count();
    if (static_cast<NodeId>(partition.labels.size()) != n) {
        throw std::invalid_argument("partition size does not match node count");
    }
    if (!original_ids.empty() && static_cast<NodeId>(original_ids.size()) != n) {
        throw std::invalid_argument("id map size does not match node count");
    }
    const Partition canonical = canonicalize(partition);

    std::ostringstream out;
    out << "graph communities {\n";
    out << "  node [style=filled, colorscheme=set312];\n";
    for (NodeId v = 0; v < n; ++v) {
        const std::int64_t shown = original_ids.empty() ? v : original_ids[v];
        const Label community = canonical.labels[v];
        out << "  " << v << " [label=\"" << shown << "\", community=" << community
            << ", fillcolor=" << (community % 12) + 1 << "];\n";
    }
    for (const auto& [u, v] : graph.edges()) {
        out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace netclust
