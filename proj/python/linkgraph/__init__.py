"""Link graphs of multigraphs: construction, colourings and minor witnesses."""

import json

from ._core import (
    LinkgraphError,
    Multigraph,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    degeneracy,
    dipole,
    figure_two_graph,
    girth,
    parse_edge_list,
    path,
    petersen,
    random_multigraph,
    run_cli,
    wheel,
)
from . import _core


def link_graph(g, ell, limit=1_000_000):
    return json.loads(_core.link_graph_json(g, ell, limit))


def path_graph(g, ell, limit=1_000_000):
    return json.loads(_core.path_graph_json(g, ell, limit))


def arc_digraph(g, ell, limit=1_000_000):
    return json.loads(_core.arc_digraph_json(g, ell, limit))


def recursive_colouring(g, ell):
    return json.loads(_core.recursive_colouring_json(g, ell))


def hadwiger_lower_bound(g, ell, search_rounds=0, seed=1):
    return json.loads(_core.hadwiger_lower_bound_json(g, ell, search_rounds, seed))


def verify(claims=(), timing=False):
    return json.loads(_core.verify_json(list(claims), timing))
