"""Triangle-pruning maximum clique heuristic, exact clique oracles and worked fixtures."""

import json

from ._core import (
    BudgetExceededError,
    CliqueResult,
    ExactClique,
    Graph,
    IterationRecord,
    Trace,
    Triangle,
    TricliqueError,
    cliques_per_min_edge,
    complement,
    complete,
    complete_multipartite,
    edge_weight_vector,
    enumerate_maximal_cliques,
    enumerate_triangles,
    extract_max_clique,
    fixture_names,
    full_trace,
    gnp,
    is_clique,
    load_graph,
    maghout_cliques,
    max_clique_exact,
    min_max,
    moon_moser,
    parse_graph,
    vertex_weight_vector,
)
from ._core import load_fixture as _load_fixture


def load_fixture(name):
    """Return (graph, expected) for an embedded fixture; expected is the parsed sidecar."""
    graph, expected = _load_fixture(name)
    return graph, json.loads(expected)


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
