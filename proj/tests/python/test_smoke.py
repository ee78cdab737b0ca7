"""End-to-end smoke tests for the compiled python package."""

import math
import os

import pytest

import netclust

DATA_DIR = os.environ.get("NETCLUST_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def bridged_triangles():
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
    return netclust.Graph.from_edges(6, edges)


def test_graph_construction():
    g = bridged_triangles()
    assert g.node_count == 6
    assert g.edge_count == 7
    assert g.neighbors(2) == [0, 1, 3]
    assert g.degree(2) == 3


def test_modularity_known_value():
    g = bridged_triangles()
    q = netclust.modularity(g, [0, 0, 0, 1, 1, 1])
    assert math.isclose(q, 5.0 / 14.0, rel_tol=0, abs_tol=1e-12)
    assert netclust.modularity(g, [0] * 6) == pytest.approx(0.0, abs=1e-12)


def test_delta_matches_recompute():
    g = bridged_triangles()
    labels = [0, 0, 0, 1, 1, 1]
    before = netclust.modularity(g, labels)
    delta = netclust.delta_modularity(g, labels, 2, 1)
    moved = list(labels)
    moved[2] = 1
    after = netclust.modularity(g, moved)
    assert delta == pytest.approx(after - before, abs=1e-12)


def test_partition_helpers():
    assert netclust.canonicalize([5, 5, 2, 7]) == [0, 0, 1, 2]
    assert netclust.community_count([5, 5, 2, 7]) == 3


def test_oracle_agrees_with_known_optimum():
    g = bridged_triangles()
    q, labels = netclust.brute_force_max_modularity(g)
    assert q == pytest.approx(5.0 / 14.0, abs=1e-12)
    assert labels == [0, 0, 0, 1, 1, 1]
    gq, glabels = netclust.greedy_baseline(g)
    assert gq == pytest.approx(5.0 / 14.0, abs=1e-12)
    assert glabels == [0, 0, 0, 1, 1, 1]


def test_optimize_is_deterministic_and_finds_optimum():
    g = bridged_triangles()
    first = netclust.optimize(g, seed=7, group_size=20, iterations=60)
    second = netclust.optimize(g, seed=7, group_size=20, iterations=60)
    assert first.best_q == second.best_q
    assert first.best_partition == second.best_partition
    assert first.best_q == pytest.approx(5.0 / 14.0, abs=1e-12)
    assert first.evaluations > 0
    assert len(first.trace) == first.iterations_run


def test_optimize_rejects_mixed_param_styles():
    g = bridged_triangles()
    with pytest.raises(TypeError):
        netclust.optimize(g, netclust.GsoParams(), seed=1)
    with pytest.raises(TypeError):
        netclust.optimize(g, bogus=3)


def test_load_karate_and_export_dot():
    path = os.path.join(DATA_DIR, "karate.gml")
    if not os.path.exists(path):
        pytest.skip("karate.gml not present")
    loaded = netclust.load_graph(path)
    assert loaded.graph.node_count == 34
    assert loaded.graph.edge_count == 78
    assert loaded.original_ids[0] == 1
    result = netclust.optimize(loaded.graph, seed=2, group_size=30, iterations=200)
    assert result.best_q > 0.3
    dot = netclust.export_dot(loaded.graph, result.best_partition, loaded.original_ids)
    assert dot.startswith("graph communities {")
    assert 'label="34"' in dot


def test_parse_round_trip():
    loaded = netclust.parse_edge_list("0 1\n1 2\n")
    assert loaded.graph.edge_count == 2
    gml = netclust.parse_gml("graph [ node [ id 1 ] node [ id 2 ] edge [ source 1 target 2 ] ]")
    assert gml.graph.node_count == 2
    assert gml.original_ids == [1, 2]
