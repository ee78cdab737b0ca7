"""Community detection by modularity-maximizing group search.

The heavy lifting lives in the compiled extension; this package re-exports
its surface and adds a keyword-friendly optimizer entry point.
"""

from ._core import (
    Graph,
    GsoParams,
    LoadedGraph,
    RunResult,
    brute_force_max_modularity,
    canonicalize,
    community_count,
    delta_modularity,
    export_dot,
    greedy_baseline,
    load_graph,
    modularity,
    parse_edge_list,
    parse_gml,
)
from ._core import optimize as _optimize

__version__ = "1.0.0"

__all__ = [
    "Graph",
    "GsoParams",
    "LoadedGraph",
    "RunResult",
    "brute_force_max_modularity",
    "canonicalize",
    "community_count",
    "delta_modularity",
    "export_dot",
    "greedy_baseline",
    "load_graph",
    "modularity",
    "optimize",
    "parse_edge_list",
    "parse_gml",
]


def optimize(graph, params=None, workers=1, **kwargs):
    """Run the group-search optimizer.

    Parameters may be given as a ``GsoParams`` instance or as keyword
    arguments matching its fields (``seed=3, iterations=500, ...``).
    """
    if params is None:
        params = GsoParams()
    elif kwargs:
        raise TypeError("pass either a GsoParams instance or keyword arguments, not both")
    for name, value in kwargs.items():
        if not hasattr(params, name):
            raise TypeError(f"unknown parameter {name!r}")
        setattr(params, name, value)
    return _optimize(graph, params, workers)
