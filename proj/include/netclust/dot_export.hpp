#ifndef NETCLUST_DOT_EXPORT_HPP
#define NETCLUST_DOT_EXPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "netclust/graph.hpp"
#include "netclust/partition.hpp"

namespace netclust {

/// Renders the graph as an undirected DOT document. Nodes are labeled with
/// their original ids (dense ids when `original_ids` is empty), carry their
/// canonical community label in a `community` attribute, and are filled from
/// a 12-color palette keyed by that label.
std::string export_dot(const Graph& graph, const Partition& partition,
                       const std::vector<std::int64_t>& original_ids = {});

}  // namespace netclust

#endif  // NETCLUST_DOT_EXPORT_HPP
