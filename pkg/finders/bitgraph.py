"""
Bitmask adjacency view shared by the exact search kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import networkx as nx

from config import config
from graphs.multipartite import ColorSubgraph
from utils.robust_utils import logger, SearchCapExceeded


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def reach_mask(adj, src: int, free: int) -> int:
    """Vertices of `free` reachable from src through `free` (src itself excluded)."""
    seen = 0
    frontier = adj[src] & free
    while frontier:
        seen |= frontier
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & free & ~seen
    return seen


@dataclass(frozen=True)
class BitGraph:
    labels: tuple
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def component_masks(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        left = self.all_mask
        comps = []
        while left:
            v = lowest_bit(left)
            comp = (1 << v) | reach_mask(self.adj, v, left)
            comps.append(comp)
            left &= ~comp
        return comps

    def block_masks(self) -> list[int]:
        found = nx.biconnected_components(self.to_networkx())
        return sorted((sum(1 << v for v in b) for b in found), key=lowest_bit)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)))
        return graph

    def label_sequence(self, indices) -> tuple:
        return tuple(self.labels[i] for i in indices)


def as_bitgraph(g) -> BitGraph:
    """BitGraph of a ColorSubgraph, a networkx graph or an existing BitGraph."""
    if isinstance(g, BitGraph):
        return g
    if isinstance(g, ColorSubgraph):
        return BitGraph(tuple(range(g.vertex_count)), g.adjacency)
    if isinstance(g, nx.Graph):
        nodes = sorted(g.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        adj = [0] * len(nodes)
        for u, v in g.edges:
            if u == v:
                continue
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        return BitGraph(tuple(nodes), tuple(adj))
    raise TypeError(f"Cannot search a {type(g).__name__}")


def check_search_cap(bg: BitGraph, cap: Optional[int] = None) -> int:
    """Raise SearchCapExceeded when bg is larger than the exact search accepts."""
    limit = config.search_cap() if cap is None else cap
    if bg.n > limit:
        logger.warning(f"Exact search refused: graph has {bg.n} vertices, cap is {limit}")
        raise SearchCapExceeded(f"Graph has {bg.n} vertices; exact search cap is {limit}")
    return limit
