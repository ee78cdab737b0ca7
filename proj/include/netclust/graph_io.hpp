#ifndef NETCLUST_GRAPH_IO_HPP
#define NETCLUST_GRAPH_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netclust/graph.hpp"

namespace netclust {

/// Parse failure with the 1-based source position where it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Non-fatal conditions noticed while loading a file.
struct LoadWarnings {
    int duplicate_edges = 0;   ///< repeated pairs collapsed to one edge
    int ignored_weights = 0;   ///< edge weight/value entries discarded
};

/// A parsed graph plus the mapping back to the ids used in the file.
struct LoadedGraph {
    Graph graph;
    /// original_ids[v] is the file id of dense node v; file order is preserved.
    std::vector<std::int64_t> original_ids;
    LoadWarnings warnings;
};

/// Parses the supported GML subset: a top-level `graph [ ... ]` block with
/// `node [ id <int> ... ]` and `edge [ source <int> target <int> ... ]`
/// entries. Unknown keys are skipped; `directed 1` is rejected; edge
/// weights are ignored with a warning count. Throws ParseError.
LoadedGraph parse_gml(std::string_view text);

/// Parses whitespace-separated `<u> <v>` pairs, one per line, with `#`
/// comments. Duplicate pairs collapse to one edge (counted); self-loops
/// are errors. Throws ParseError.
LoadedGraph parse_edge_list(std::string_view text);

/// Serializes a graph to edge-list text over its dense node ids.
std::string write_edge_list(const Graph& graph);

enum class InputFormat { gml, edgelist };

/// Reads and parses a file in the given format. Throws std::runtime_error
/// when the file cannot be read, ParseError on malformed content.
LoadedGraph load_graph_file(const std::string& path, InputFormat format);

}  // namespace netclust

#endif  // NETCLUST_GRAPH_IO_HPP
