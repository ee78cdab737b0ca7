#!/usr/bin/env python3
"""Regenerate the bundled benchmark datasets from networkx's embedded copies.

Writes data/karate.gml (Zachary's karate club, 34 nodes / 78 edges, 1-based
ids as in the classic distribution) and data/lesmis.gml (Les Miserables
co-appearance network, 77 nodes / 254 edges, character names kept as labels).
The remaining benchmark networks (dolphins, football, jazz) are not bundled;
see data/README.md for how to obtain them.
"""

import pathlib

import networkx as nx

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"


def write_gml(path, node_lines, edge_lines):
    lines = ["graph [", "  directed 0"]
    lines += [f"  {line}" for line in node_lines]
    lines += [f"  {line}" for line in edge_lines]
    lines.append("]")
    path.write_text("\n".join(lines) + "\n")


def export_karate():
    g = nx.karate_club_graph()
    assert g.number_of_nodes() == 34 and g.number_of_edges() == 78
    nodes = [f"node [ id {v + 1} ]" for v in sorted(g.nodes())]
    edges = [f"edge [ source {u + 1} target {v + 1} ]" for u, v in sorted(g.edges())]
    write_gml(DATA_DIR / "karate.gml", nodes, edges)


def export_lesmis():
    g = nx.les_miserables_graph()
    assert g.number_of_nodes() == 77 and g.number_of_edges() == 254
    index = {name: i for i, name in enumerate(g.nodes())}
    nodes = [f'node [ id {i} label "{name}" ]' for name, i in index.items()]
    edges = [
        f"edge [ source {index[u]} target {index[v]} ]" for u, v in g.edges()
    ]
    write_gml(DATA_DIR / "lesmis.gml", nodes, edges)


def main():
    DATA_DIR.mkdir(exist_ok=True)
    export_karate()
    export_lesmis()
    print(f"wrote {DATA_DIR / 'karate.gml'} and {DATA_DIR / 'lesmis.gml'}")


if __name__ == "__main__":
    main()
