#include "netclust/partition.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace netclust {

Partition canonicalize(const Partition& partition) {
    Partition out;
    out.labels.reserve(partition.size());
    std::unordered_map<Label, Label> relabel;
    for (const Label l : partition.labels) {
        const auto [it, inserted] = relabel.emplace(l, static_cast<Label>(relabel.size()));
        out.labels.push_back(it->second);
    }
    return out;
}

int community_count(const Partition& partition) {
    if (partition.labels.empty()) {
        throw std::invalid_argument("partition is empty");
    }
    std::unordered_set<Label> distinct(partition.labels.begin(), partition.labels.end());
    return static_cast<int>(distinct.size());
}

}  // namespace netclust
