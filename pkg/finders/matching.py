"""
Maximum matchings and connected matchings of general graphs.

networkx's max_weight_matching is Edmonds' blossom algorithm; with unit
weights and maxcardinality=True it returns a maximum cardinality matching.
"""

from __future__ import annotations

import networkx as nx

from finders.bitgraph import as_bitgraph
from finders.witness import StructureWitness
from graphs.multipartite import as_networkx, components
from utils.robust_utils import logger


def _matching_edges(graph: nx.Graph) -> tuple[tuple, ...]:
    matched = nx.max_weight_matching(graph, maxcardinality=True)
    return tuple(sorted(tuple(sorted(e)) for e in matched))


def max_matching(g) -> tuple[int, StructureWitness]:
    """alpha'(g): size of a largest matching, with the matching as witness."""
    graph = _as_graph(g)
    edges = _matching_edges(graph)
    logger.debug(f"Maximum matching on {graph.number_of_nodes()} vertices: {len(edges)}")
    return len(edges), StructureWitness('matching', edges=edges)


def connected_matching_number(g) -> tuple[int, StructureWitness]:
    """alpha'_*(g): the largest matching inside a single component."""
    graph = _as_graph(g)
    best_size, best_edges, best_comp = 0, (), None
    for comp_id, comp in enumerate(components(graph)):
        if len(comp) < 2 * best_size + 2:
            continue
        edges = _matching_edges(graph.subgraph(comp))
        if len(edges) > best_size:
            best_size, best_edges, best_comp = len(edges), edges, comp_id
    logger.debug(f"Connected matching number on {graph.number_of_nodes()} vertices: {best_size}")
    return best_size, StructureWitness('connected_matching', edges=best_edges, component=best_comp)


def _as_graph(g) -> nx.Graph:
    if isinstance(g, nx.Graph):
        return g
    try:
        return as_networkx(g)
    except TypeError:
        bg = as_bitgraph(g)
        graph = bg.to_networkx()
        return nx.relabel_nodes(graph, dict(enumerate(bg.labels)))
