"""
Shared fixtures and brute-force oracles.

The oracles work on plain networkx graphs and share no code with the
bitmask search kernels they check.
"""

import sys
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from graphs.multipartite import TwoColoring  # noqa: E402
from hamiltonicity.bipartite import BalancedBipartite  # noqa: E402


# ------------------------------------------------------------------
# Oracles
# ------------------------------------------------------------------

def naive_has_path(graph: nx.Graph, k: int) -> bool:
    """Some simple path on exactly k vertices."""
    if k == 1:
        return graph.number_of_nodes() > 0

    def walk(path, seen):
        if len(path) == k:
            return True
        return any(walk(path + [w], seen | {w}) for w in graph[path[-1]] if w not in seen)

    return any(walk([v], {v}) for v in graph.nodes)


def naive_has_cycle(graph: nx.Graph, k: int) -> bool:
    """Some cycle on exactly k vertices."""
    def walk(path, seen):
        if len(path) == k:
            return graph.has_edge(path[-1], path[0])
        return any(walk(path + [w], seen | {w}) for w in graph[path[-1]] if w not in seen)

    return any(walk([v], {v}) for v in graph.nodes)


def brute_max_matching(graph: nx.Graph) -> int:
    """Largest matching by branching on the smallest unmatched vertex."""
    def best(free):
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        value = best(rest)
        for w in graph[v]:
            if w in rest:
                value = max(value, 1 + best(rest - {w}))
        return value

    return best(frozenset(graph.nodes))


def brute_connected_matching(graph: nx.Graph) -> int:
    return max((brute_max_matching(graph.subgraph(c)) for c in nx.connected_components(graph)), default=0)


# ------------------------------------------------------------------
# Random factories
# ------------------------------------------------------------------

def random_graph(rng, n: int, p: float) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                graph.add_edge(u, v)
    return graph


def random_coloring(rng, host) -> TwoColoring:
    return TwoColoring(host, tuple(int(c) for c in rng.integers(1, 3, size=host.edge_count)))


def random_bipartite(rng, m: int, p: float) -> BalancedBipartite:
    return BalancedBipartite.from_edges(m, [(i, j) for i in range(m) for j in range(m) if rng.random() < p])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
