#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "netclust/graph.hpp"

using namespace netclust;
using namespace netclust::testing;

TEST_CASE("from_edges builds counts and sorted adjacency") {
    const Graph g = make_graph(4, {{2, 1}, {0, 1}, {3, 0}});
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 3);
    const auto nbr1 = g.neighbors(1);
    REQUIRE(nbr1.size() == 2);
    CHECK(nbr1[0] == 0);
    CHECK(nbr1[1] == 2);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 1);
}

TEST_CASE("edges are normalized to u < v and sorted") {
    const Graph g = make_graph(3, {{2, 0}, {1, 0}});
    const auto& edges = g.edges();
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == Edge{0, 1});
    CHECK(edges[1] == Edge{0, 2});
}

TEST_CASE("degree on paths") {
    const Graph g = path_graph(3);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(0) == 1);
}

TEST_CASE("degree sum equals twice the edge count") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(12, 0.3, rng);
        std::int64_t total = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) total += g.degree(v);
        CHECK(total == 2 * static_cast<std::int64_t>(g.edge_count()));
    }
}

TEST_CASE("adjacency is consistent with the edge list") {
    Rng rng(7);
    const Graph g = random_graph(10, 0.4, rng);
    std::size_t adjacency_total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) adjacency_total += g.neighbors(v).size();
    CHECK(adjacency_total == 2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        const auto nu = g.neighbors(u);
        const auto nv = g.neighbors(v);
        CHECK(std::find(nu.begin(), nu.end(), v) != nu.end());
        CHECK(std::find(nv.begin(), nv.end(), u) != nv.end());
    }
}

TEST_CASE("construction rejects invalid input") {
    CHECK_THROWS_AS(make_graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("neighbor and degree queries reject out-of-range nodes") {
    const Graph g = path_graph(3);
    CHECK_THROWS_AS(g.neighbors(3), std::out_of_range);
    CHECK_THROWS_AS(g.neighbors(-1), std::out_of_range);
    CHECK_THROWS_AS(g.degree(5), std::out_of_range);
}

TEST_CASE("isolated nodes are allowed") {
    const Graph g = make_graph(5, {{0, 1}});
    CHECK(g.degree(4) == 0);
    CHECK(g.neighbors(4).empty());
}
