"""
Degree conditions for Hamiltonicity of balanced bipartite graphs, with exact
searches to cross-check them.

A certifier answers GUARANTEED only when its degree condition holds; UNKNOWN
never means "not Hamiltonian". Sides are U = u_0..u_{m-1} and V = v_0..v_{m-1};
as a plain graph u_i is vertex i and v_j is vertex m + j. Degree sequences are
sorted with ties broken by vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterator, Optional

import networkx as nx

from finders.bitgraph import BitGraph, as_bitgraph, check_search_cap, iter_bits
from finders.paths import hamiltonian_cycle_indices
from finders.witness import StructureWitness
from graphs.multipartite import TwoColoring, check_color
from utils.robust_utils import logger, HostError, SearchError


class Certification(Enum):
    GUARANTEED = 'guaranteed'
    UNKNOWN = 'unknown'

    def __bool__(self) -> bool:
        return self is Certification.GUARANTEED

    @classmethod
    def of(cls, holds: bool) -> 'Certification':
        return cls.GUARANTEED if holds else cls.UNKNOWN


@dataclass(frozen=True)
class BalancedBipartite:
    """Bipartite graph with |U| = |V| = m; u_adj[i] is the bitmask of v_j adjacent to u_i."""
    m: int
    u_adj: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise HostError(f"Side size must be a positive integer, got {self.m!r}")
        if len(self.u_adj) != self.m:
            raise HostError(f"Unbalanced sides: {len(self.u_adj)} adjacency rows for m={self.m}")
        if any(row < 0 or row >> self.m for row in self.u_adj):
            raise HostError("Adjacency row names a vertex outside V")
        object.__setattr__(self, 'u_adj', tuple(self.u_adj))

    @classmethod
    def from_edges(cls, m: int, edges) -> 'BalancedBipartite':
        """Edges are (i, j) pairs: u_i adjacent to v_j."""
        rows = [0] * m
        for i, j in edges:
            if not (0 <= i < m and 0 <= j < m):
                raise HostError(f"Edge ({i}, {j}) is outside a {m}x{m} bipartite graph")
            rows[i] |= 1 << j
        return cls(m, tuple(rows))

    @classmethod
    def from_color_subgraph(cls, coloring: TwoColoring, color: int) -> 'BalancedBipartite':
        """One color class of a coloring of K_{m,m}."""
        host = coloring.host
        if host.s != 2 or host.part_sizes[0] != host.part_sizes[1]:
            raise HostError(f"Unbalanced sides: {host.describe()} is not K_{{m,m}}")
        m = host.part_sizes[0]
        return cls.from_edges(m, [(u, v - m) for u, v in coloring.edges_of(check_color(color))])

    def with_edge(self, i: int, j: int) -> 'BalancedBipartite':
        rows = list(self.u_adj)
        rows[i] |= 1 << j
        return BalancedBipartite(self.m, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.u_adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in iter_bits(self.u_adj[i])]

    @cached_property
    def u_degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.u_adj)

    @cached_property
    def v_degrees(self) -> tuple[int, ...]:
        return tuple(sum(row >> j & 1 for row in self.u_adj) for j in range(self.m))

    @cached_property
    def u_order(self) -> tuple[int, ...]:
        """u indices sorted by (degree, index): u_order[k-1] is u_k of the degree conditions."""
        return tuple(sorted(range(self.m), key=lambda i: (self.u_degrees[i], i)))

    @cached_property
    def v_order(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.m), key=lambda j: (self.v_degrees[j], j)))

    def sorted_u_degrees(self) -> list[int]:
        return [self.u_degrees[i] for i in self.u_order]

    def sorted_v_degrees(self) -> list[int]:
        return [self.v_degrees[j] for j in self.v_order]

    def to_bitgraph(self) -> BitGraph:
        m = self.m
        adj = [row << m for row in self.u_adj] + [0] * m
        for i, row in enumerate(self.u_adj):
            for j in iter_bits(row):
                adj[m + j] |= 1 << i
        return BitGraph(tuple(range(2 * m)), tuple(adj))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(2 * self.m))
        graph.add_edges_from((i, self.m + j) for i, j in self.edges())
        return graph


def _require_pair_sides(H: BalancedBipartite) -> None:
    if not isinstance(H, BalancedBipartite):
        raise HostError(f"Expected a BalancedBipartite, got {type(H).__name__}")
    if H.m < 2:
        raise HostError(f"Degree conditions need m >= 2, got m={H.m}")


def chvatal_certifier(H: BalancedBipartite) -> Certification:
    """Hamiltonian if d(u_i) <= i < m implies d(v_{m-i}) >= m-i+1 for every i."""
    _require_pair_sides(H)
    m = H.m
    du, dv = H.sorted_u_degrees(), H.sorted_v_degrees()
    holds = all(dv[m - i - 1] >= m - i + 1 for i in range(1, m) if du[i - 1] <= i)
    logger.debug(f"Chvatal condition on m={m}: {'holds' if holds else 'fails'}")
    return Certification.of(holds)


def berge_certifier(H: BalancedBipartite) -> Certification:
    """
    Hamiltonian bi-connected if, for the smallest i with d(u_i) <= i+1 and the
    smallest j with d(v_j) <= j+1, d(u_i) + d(v_j) >= m+2.
    """
    _require_pair_sides(H)
    m = H.m
    du, dv = H.sorted_u_degrees(), H.sorted_v_degrees()
    # index m always qualifies since degrees are at most m
    i = next(k for k in range(1, m + 1) if du[k - 1] <= k + 1)
    j = next(k for k in range(1, m + 1) if dv[k - 1] <= k + 1)
    holds = du[i - 1] + dv[j - 1] >= m + 2
    logger.debug(f"Berge condition on m={m} at i={i}, j={j}: {'holds' if holds else 'fails'}")
    return Certification.of(holds)


def las_vergnas_certifier(H: BalancedBipartite, q: int) -> Certification:
    """
    Every q edges forming vertex-disjoint paths lie on a Hamiltonian cycle if each
    nonadjacent u_i v_j with d(u_i) <= i+q and d(v_j) <= j+q has d(u_i)+d(v_j) >= m+q+1.
    """
    _require_pair_sides(H)
    m = H.m
    if not isinstance(q, int) or not 0 <= q <= m - 1:
        raise SearchError(f"q must satisfy 0 <= q <= m-1 = {m - 1}, got {q!r}")

    for i, u in enumerate(H.u_order, start=1):
        du = H.u_degrees[u]
        if du > i + q:
            continue
        for j, v in enumerate(H.v_order, start=1):
            dv = H.v_degrees[v]
            if dv > j + q or H.has_edge(u, v):
                continue
            if du + dv < m + q + 1:
                logger.debug(f"Las Vergnas condition (q={q}) fails at u_{i}, v_{j}")
                return Certification.UNKNOWN
    return Certification.GUARANTEED


def _search_graph(H) -> BitGraph:
    if isinstance(H, BalancedBipartite):
        return H.to_bitgraph()
    return as_bitgraph(H)


def _check_linear_forest(required) -> None:
    if not required:
        return
    forest = nx.Graph()
    forest.add_edges_from(required)
    if forest.number_of_edges() != len(required):
        raise SearchError("Required edges contain a repeated edge")
    if any(d > 2 for _, d in forest.degree) or not nx.is_forest(forest):
        raise SearchError("Required edges must form vertex-disjoint paths")


def hamiltonian_cycle_through(H, required_edges=(), cap: Optional[int] = None) -> Optional[StructureWitness]:
    """A Hamiltonian cycle of H containing every required edge, or None (exact within the cap)."""
    bg = _search_graph(H)
    index = {label: i for i, label in enumerate(bg.labels)}
    required = [tuple(e) for e in required_edges]
    for u, v in required:
        if u not in index or v not in index or not bg.has_edge(index[u], index[v]):
            raise SearchError(f"Required edge {u}-{v} is not an edge of the graph")
    _check_linear_forest(required)
    check_search_cap(bg, cap)

    found = hamiltonian_cycle_indices(bg, [(index[u], index[v]) for u, v in required])
    logger.debug(f"Hamiltonian cycle through {len(required)} required edges on {bg.n} vertices: "
                 f"{'found' if found else 'none'}")
    if found is None:
        return None
    return StructureWitness('cycle', vertices=bg.label_sequence(found))


def hamiltonian_cycle(H, cap: Optional[int] = None) -> Optional[StructureWitness]:
    return hamiltonian_cycle_through(H, (), cap)


def hamiltonian_path_between(H, a, b, cap: Optional[int] = None) -> Optional[StructureWitness]:
    """Hamiltonian path from a to b: a Hamiltonian cycle of H + ab through ab, opened at ab."""
    bg = _search_graph(H)
    index = {label: i for i, label in enumerate(bg.labels)}
    if a not in index or b not in index or a == b:
        raise SearchError(f"Endpoints must be two distinct vertices, got {a!r} and {b!r}")
    check_search_cap(bg, cap)
    ia, ib = index[a], index[b]
    if bg.n == 2:
        return StructureWitness('path', vertices=(a, b)) if bg.has_edge(ia, ib) else None

    adj = list(bg.adj)
    adj[ia] |= 1 << ib
    adj[ib] |= 1 << ia
    found = hamiltonian_cycle_indices(BitGraph(bg.labels, tuple(adj)), [(ia, ib)])
    if found is None:
        return None
    # rotate so the cycle reads a ... b, dropping the added edge
    k = found.index(ia)
    order = found[k:] + found[:k]
    if order[1] == ib:
        order = [order[0]] + order[1:][::-1]
    return StructureWitness('path', vertices=bg.label_sequence(order))


def is_hamiltonian_biconnected(H: BalancedBipartite, cap: Optional[int] = None) -> bool:
    """Every pair u_i, v_j is joined by a Hamiltonian path."""
    _require_pair_sides(H)
    return all(
        hamiltonian_path_between(H, i, H.m + j, cap) is not None
        for i in range(H.m) for j in range(H.m)
    )


def linear_forests(H, q: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every set of q edges of H forming vertex-disjoint paths (as plain-graph edges)."""
    graph = H.to_networkx() if isinstance(H, BalancedBipartite) else _search_graph(H).to_networkx()
    edges = sorted(tuple(sorted(e)) for e in graph.edges)
    for chosen in combinations(edges, q):
        degree: dict[int, int] = {}
        for u, v in chosen:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if max(degree.values(), default=0) > 2:
            continue
        if q == 0 or nx.is_forest(nx.Graph(chosen)):
            yield chosen


def has_q_edge_extension(H, q: int, cap: Optional[int] = None) -> bool:
    """Whether every q-edge linear forest of H lies on a Hamiltonian cycle."""
    return all(hamiltonian_cycle_through(H, forest, cap) is not None for forest in linear_forests(H, q))
