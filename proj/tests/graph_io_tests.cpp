#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "netclust/graph_io.hpp"

using namespace netclust;
using namespace netclust::testing;

TEST_CASE("smallest legal gml file") {
    const LoadedGraph loaded =
        parse_gml("graph [ node [ id 0 ] node [ id 1 ] edge [ source 0 target 1 ] ]");
    CHECK(loaded.graph.node_count() == 2);
    CHECK(loaded.graph.edge_count() == 1);
    CHECK(loaded.original_ids == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("gml ids remap densely preserving file order") {
    const LoadedGraph loaded = parse_gml(
        "graph [ node [ id 40 ] node [ id 7 ] node [ id 19 ] "
        "edge [ source 19 target 40 ] ]");
    CHECK(loaded.original_ids == std::vector<std::int64_t>{40, 7, 19});
    CHECK(loaded.graph.edge_count() == 1);
    CHECK(loaded.graph.degree(0) == 1);  // node 40
    CHECK(loaded.graph.degree(1) == 0);  // node 7
}

TEST_CASE("gml edge referencing an undeclared node fails with position") {
    try {
        parse_gml("graph [ node [ id 0 ] edge [ source 0 target 5 ] ]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("undeclared node 5") != std::string::npos);
        CHECK(e.line() == 1);
    }
}

TEST_CASE("gml rejects duplicate node ids, self-loops and directed graphs") {
    CHECK_THROWS_AS(parse_gml("graph [ node [ id 3 ] node [ id 3 ] ]"), ParseError);
    CHECK_THROWS_AS(
        parse_gml("graph [ node [ id 1 ] edge [ source 1 target 1 ] ]"), ParseError);
    CHECK_THROWS_AS(
        parse_gml("graph [ directed 1 node [ id 0 ] node [ id 1 ] ]"), ParseError);
}

TEST_CASE("gml reports syntax errors with line and column") {
    try {
        parse_gml("graph [\n  node [ id ]\n]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("gml skips unknown keys and nested blocks") {
    const LoadedGraph loaded = parse_gml(
        "Creator \"someone\"\n"
        "graph [\n"
        "  comment \"irrelevant\"\n"
        "  directed 0\n"
        "  node [ id 0 label \"alpha\" graphics [ x 1.5 y 2.5 ] ]\n"
        "  node [ id 1 label \"beta\" ]\n"
        "  edge [ source 0 target 1 ]\n"
        "]\n");
    CHECK(loaded.graph.node_count() == 2);
    CHECK(loaded.graph.edge_count() == 1);
}

TEST_CASE("gml counts ignored edge weights") {
    const LoadedGraph loaded = parse_gml(
        "graph [ node [ id 0 ] node [ id 1 ] node [ id 2 ] "
        "edge [ source 0 target 1 value 4 ] edge [ source 1 target 2 weight 2.5 ] ]");
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.warnings.ignored_weights == 2);
}

TEST_CASE("gml collapses duplicate edges with a warning count") {
    const LoadedGraph loaded = parse_gml(
        "graph [ node [ id 0 ] node [ id 1 ] "
        "edge [ source 0 target 1 ] edge [ source 1 target 0 ] ]");
    CHECK(loaded.graph.edge_count() == 1);
    CHECK(loaded.warnings.duplicate_edges == 1);
}

TEST_CASE("edge list basics") {
    const LoadedGraph loaded = parse_edge_list("0 1\n1 2\n");
    CHECK(loaded.graph.node_count() == 3);
    CHECK(loaded.graph.edge_count() == 2);
}

TEST_CASE("edge list collapses duplicates") {
    const LoadedGraph loaded = parse_edge_list("0 1\n0 1\n");
    CHECK(loaded.graph.node_count() == 2);
    CHECK(loaded.graph.edge_count() == 1);
    CHECK(loaded.warnings.duplicate_edges == 1);
}

TEST_CASE("edge list rejects self-loops and bad tokens") {
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    try {
        parse_edge_list("0 1\n2 zz\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("edge list supports comments and sparse ids") {
    const LoadedGraph loaded = parse_edge_list("# comment line\n10 20\n20 30 # trailing\n");
    CHECK(loaded.graph.node_count() == 3);
    CHECK(loaded.original_ids == std::vector<std::int64_t>{10, 20, 30});
}

TEST_CASE("empty inputs are rejected") {
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_gml("graph [ ]"), ParseError);
    CHECK_THROWS_AS(parse_gml(""), ParseError);
}

TEST_CASE("edge list round-trip preserves the edge set") {
    Rng rng(3);
    int tested = 0;
    while (tested < 10) {
        const Graph g = random_graph(9, 0.35, rng);
        bool isolated = false;
        for (NodeId v = 0; v < g.node_count(); ++v) isolated |= g.degree(v) == 0;
        if (isolated) continue;  // isolated nodes cannot survive an edge-list round trip
        ++tested;
        const LoadedGraph back = parse_edge_list(write_edge_list(g));
        CHECK(back.graph.node_count() == g.node_count());
        CHECK(back.graph.edge_count() == g.edge_count());
        std::set<Edge> original(g.edges().begin(), g.edges().end());
        std::set<Edge> reparsed;
        for (const auto& [u, v] : back.graph.edges()) {
            const auto a = static_cast<NodeId>(back.original_ids[u]);
            const auto b = static_cast<NodeId>(back.original_ids[v]);
            reparsed.insert({std::min(a, b), std::max(a, b)});
        }
        CHECK(original == reparsed);
    }
}

TEST_CASE("karate dataset loads with the published counts") {
    const LoadedGraph loaded = load_dataset("karate.gml");
    CHECK(loaded.graph.node_count() == 34);
    CHECK(loaded.graph.edge_count() == 78);
    // Original id 34 is the instructor hub.
    for (NodeId v = 0; v < loaded.graph.node_count(); ++v) {
        if (loaded.original_ids[v] == 34) CHECK(loaded.graph.degree(v) == 17);
    }
}

TEST_CASE("les miserables dataset loads with the published counts") {
    const LoadedGraph loaded = load_dataset("lesmis.gml");
    CHECK(loaded.graph.node_count() == 77);
    CHECK(loaded.graph.edge_count() == 254);
}

TEST_CASE("missing files raise a readable error") {
    CHECK_THROWS_AS(load_graph_file("/nonexistent/x.gml", InputFormat::gml),
                    std::runtime_error);
}
