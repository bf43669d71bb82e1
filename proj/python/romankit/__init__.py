"""Exact {k}-Roman domination solvers, graph constructions and verification suites."""

import json

from ._core import (
    Graph,
    Hypergraph,
    ParseError,
    co_sun,
    compatible_split,
    complement,
    edge_cover_number,
    enumerate_graphs,
    exact_cover_reduction,
    find_split_partition,
    from_graph6,
    gamma,
    gamma_rk,
    incidence_graph,
    is_isomorphic,
    is_k_roman,
    is_krdf,
    middle_graph,
    perfect_matching,
    read_edge_list,
    read_hypergraph,
    split_join,
    split_join_decompose,
    strongly_compatible_minimal,
    suite_names,
    sun,
    to_edge_list,
    to_graph6,
)
from ._core import _run_suite


def run_suite(name, threads=-1, **budget):
    """Run a verification suite and return its report as a dict.

    Budget keys (max_n, max_t, factor_max_n, seed, ...) override the defaults.
    """
    return json.loads(_run_suite(name, json.dumps(budget), threads))

__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
