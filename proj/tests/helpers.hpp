#ifndef NETCLUST_TESTS_HELPERS_HPP
#define NETCLUST_TESTS_HELPERS_HPP

#include <cctype>
#include <string>
#include <vector>

#include "netclust/graph.hpp"
#include "netclust/graph_io.hpp"
#include "netclust/modularity.hpp"
#include "netclust/partition.hpp"
#include "netclust/rng.hpp"

namespace netclust::testing {

inline Graph make_graph(NodeId n, std::vector<Edge> edges) {
    return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return make_graph(n, std::move(edges));
}

inline Graph cycle_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return make_graph(n, std::move(edges));
}

inline Graph complete_graph(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return make_graph(n, std::move(edges));
}

inline Graph star_graph(NodeId leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return make_graph(leaves + 1, std::move(edges));
}

/// Two triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Graph bridged_triangles() {
    return make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

inline Partition two_triangle_split() { return Partition{{0, 0, 0, 1, 1, 1}}; }

inline Partition all_in_one(NodeId n) { return Partition{std::vector<Label>(n, 0)}; }

/// Erdos-Renyi style draw; redraws until at least one edge exists.
inline Graph random_graph(NodeId n, double p, Rng& rng) {
    for (;;) {
        std::vector<Edge> edges;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (rng.bernoulli(p)) edges.push_back({u, v});
        if (!edges.empty()) return make_graph(n, std::move(edges));
    }
}

inline Partition random_partition(NodeId n, int k_max, Rng& rng) {
    Partition p;
    p.labels.resize(n);
    for (auto& label : p.labels) label = rng.uniform_int(k_max);
    return p;
}

inline std::string data_path(const std::string& name) {
    return std::string(NETCLUST_DATA_DIR) + "/" + name;
}

inline LoadedGraph load_dataset(const std::string& name) {
    return load_graph_file(data_path(name), InputFormat::gml);
}

/// Bell numbers B(0..n) via the Bell-triangle recurrence.
inline std::vector<unsigned long long> bell_numbers(int n) {
    std::vector<unsigned long long> bell{1};
    std::vector<unsigned long long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (unsigned long long x : row) next.push_back(next.back() + x);
        row = std::move(next);
        bell.push_back(row.front());
    }
    return bell;
}

/// Independent maximizer: scans every label vector in [0, n)^n and dedups by
/// canonical form implicitly (argmax over a superset of all partitions).
inline double max_modularity_by_label_vectors(const Graph& graph) {
    const NodeId n = graph.node_count();
    Partition p;
    p.labels.assign(n, 0);
    double best = modularity(graph, p);
    for (;;) {
        int i = 0;
        while (i < n && p.labels[i] == n - 1) p.labels[i++] = 0;
        if (i == n) break;
        ++p.labels[i];
        best = std::max(best, modularity(graph, p));
    }
    return best;
}

/// Minimal checker for the undirected-DOT subset this project emits:
///   graph ID? { (node|edge|graph) attrs ; | ID attrs? ; | ID -- ID attrs? ; }
/// Accepts identifiers, numerals, and double-quoted strings as ids/values.
class DotChecker {
public:
    explicit DotChecker(const std::string& text) : text_(text) {}

    bool valid() {
        pos_ = 0;
        ok_ = true;
        expect_word("graph");
        if (!peek_is('{')) skip_id();
        expect('{');
        while (ok_ && !peek_is('}')) statement();
        expect('}');
        skip_ws();
        return ok_ && pos_ == text_.size();
    }

private:
    void statement() {
        const std::string head = take_id();
        if (head.empty()) {
            ok_ = false;
            return;
        }
        if (head == "node" || head == "edge" || head == "graph") {
            attr_list();
        } else {
            skip_ws();
            if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '-') {
                pos_ += 2;
                if (take_id().empty()) ok_ = false;
            }
            if (peek_is('[')) attr_list();
        }
        expect(';');
    }

    void attr_list() {
        expect('[');
        while (ok_ && !peek_is(']')) {
            if (take_id().empty()) ok_ = false;
            expect('=');
            if (take_id().empty()) ok_ = false;
            if (peek_is(',')) ++pos_;
        }
        expect(']');
    }

    std::string take_id() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '"') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
            if (pos_ >= text_.size()) return {};
            ++pos_;
            return text_.substr(start, pos_ - start);
        }
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '.' || (text_[pos_] == '-' && pos_ == start))) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    void skip_id() { take_id(); }

    void expect_word(const std::string& word) {
        if (take_id() != word) ok_ = false;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
        } else {
            ok_ = false;
        }
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string text_;
    std::size_t pos_ = 0;
    bool ok_ = true;
};

inline bool is_valid_dot(const std::string& text) { return DotChecker(text).valid(); }

}  // namespace netclust::testing

#endif  // NETCLUST_TESTS_HELPERS_HPP
