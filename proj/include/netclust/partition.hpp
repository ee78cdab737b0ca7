#ifndef NETCLUST_PARTITION_HPP
#define NETCLUST_PARTITION_HPP

#include <cstdint>
#include <vector>

namespace netclust {

/// Community label of a node.
using Label = std::int32_t;

/// A candidate clustering: labels[v] is the community of node v.
struct Partition {
    std::vector<Label> labels;

    std::size_t size() const { return labels.size(); }
    Label& operator[](std::size_t v) { return labels[v]; }
    Label operator[](std::size_t v) const { return labels[v]; }

    bool operator==(const Partition&) const = default;
};

/// Relabels communities as a restricted-growth string: the first node gets
/// label 0 and every later first occurrence gets the next unused integer.
/// Idempotent; the encoded clustering is unchanged.
Partition canonicalize(const Partition& partition);

/// Number of distinct labels in use.
int community_count(const Partition& partition);

}  // namespace netclust

#endif  // NETCLUST_PARTITION_HPP
