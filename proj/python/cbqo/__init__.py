"""Small-cancellation presentations, their C'(λ) checks and the quasi-orders they encode."""

import json

from . import _core
from ._core import (
    Error,
    PreconditionError,
    check_cprime,
    cli,
    cyclic_word,
    dehn_trace,
    reduce,
    suite_names,
    translate_leq,
    tree_leq,
    word_order,
)


def build_tree_group(nodes, depth):
    """Presentation dict for the tree group of a prefix-closed set of binary strings."""
    return json.loads(_core.build_tree_group_json(list(nodes), depth))


def build_graph_group(vertices, edges):
    """Presentation dict for the graph group of a simple undirected graph."""
    return json.loads(_core.build_graph_group_json(vertices, [tuple(e) for e in edges]))


def run_suite(name, seed=1, jobs=1, corrupt=False, size=None):
    """Run a named property suite; `size` overrides the random instance counts."""
    return json.loads(_core.run_suite_json(name, seed, jobs, corrupt, size))


__all__ = [
    "Error",
    "PreconditionError",
    "build_graph_group",
    "build_tree_group",
    "check_cprime",
    "cli",
    "cyclic_word",
    "dehn_trace",
    "reduce",
    "run_suite",
    "suite_names",
    "translate_leq",
    "tree_leq",
    "word_order",
]
