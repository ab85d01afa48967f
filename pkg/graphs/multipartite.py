"""
Complete multipartite hosts, 2-edge-colorings and per-color subgraph views.

Vertices are 0..N-1 with the parts laid out contiguously in nonincreasing size
order. Cross-part pairs are numbered in lexicographic order; that numbering fixes
the bit order of every serialized coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Optional

import networkx as nx

from utils.robust_utils import logger, HostError, ColoringError, DualColorError, IncompleteColoringError

RED = 1
BLUE = 2
COLORS = (RED, BLUE)
COLOR_NAMES = {RED: 'red', BLUE: 'blue'}


def other_color(color: int) -> int:
    return BLUE if color == RED else RED


def check_color(color) -> int:
    if color not in COLORS:
        raise ColoringError(f"Unknown color {color!r}; colors are 1 (red) and 2 (blue)")
    return color


@dataclass(frozen=True)
class MultipartiteHost:
    part_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.part_sizes)
        if len(sizes) < 2:
            raise HostError(f"A multipartite host needs at least 2 parts, got {list(sizes)}")
        if any((not isinstance(n, int)) or n < 1 for n in sizes):
            raise HostError(f"Part sizes must be positive integers, got {list(sizes)}")
        if any(a < b for a, b in zip(sizes, sizes[1:])):
            raise HostError(f"Part sizes must be nonincreasing, got {list(sizes)}")
        object.__setattr__(self, 'part_sizes', sizes)

    @property
    def N(self) -> int:
        return sum(self.part_sizes)

    @property
    def s(self) -> int:
        return len(self.part_sizes)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        starts, total = [], 0
        for size in self.part_sizes:
            starts.append(total)
            total += size
        return tuple(starts)

    @cached_property
    def part_index(self) -> tuple[int, ...]:
        return tuple(i for i, size in enumerate(self.part_sizes) for _ in range(size))

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        labels = self.part_index
        n = self.N
        return tuple((u, v) for u in range(n) for v in range(u + 1, n) if labels[u] != labels[v])

    @cached_property
    def _pair_lookup(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.pairs)}

    @property
    def edge_count(self) -> int:
        return len(self.pairs)

    def parts(self) -> list[range]:
        return [range(start, start + size) for start, size in zip(self.offsets, self.part_sizes)]

    def part_of(self, v: int) -> int:
        self.check_vertex(v)
        return self.part_index[v]

    def check_vertex(self, v) -> int:
        if not isinstance(v, int) or not 0 <= v < self.N:
            raise ColoringError(f"Vertex {v!r} is not in 0..{self.N - 1}")
        return v

    def pair_index(self, u: int, v: int) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        if self.part_index[u] == self.part_index[v]:
            raise ColoringError(f"Vertices {u} and {v} lie in the same part")
        return self._pair_lookup[(u, v) if u < v else (v, u)]

    def host_degree(self, v: int) -> int:
        return self.N - self.part_sizes[self.part_of(v)]

    def describe(self) -> str:
        return 'K_{' + ','.join(str(n) for n in self.part_sizes) + '}'


def build_host(part_sizes: Iterable[int]) -> MultipartiteHost:
    """Build the complete multipartite host, sorting part sizes nonincreasing."""
    sizes = list(part_sizes)
    if not sizes:
        raise HostError("Part sizes must be a nonempty list")
    if any((not isinstance(n, int)) or isinstance(n, bool) or n < 1 for n in sizes):
        raise HostError(f"Part sizes must be positive integers, got {sizes}")
    host = MultipartiteHost(tuple(sorted(sizes, reverse=True)))
    logger.debug(f"Built host {host.describe()} with N={host.N}, {host.edge_count} edges")
    return host


@dataclass(frozen=True)
class TwoColoring:
    host: MultipartiteHost
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        if len(colors) != self.host.edge_count:
            raise ColoringError(
                f"Coloring has {len(colors)} entries, host {self.host.describe()} has {self.host.edge_count} edges")
        bad = [c for c in colors if c not in COLORS]
        if bad:
            raise ColoringError(f"Unknown color value {bad[0]!r}")
        object.__setattr__(self, 'colors', colors)

    @classmethod
    def uniform(cls, host: MultipartiteHost, color: int) -> 'TwoColoring':
        return cls(host, (check_color(color),) * host.edge_count)

    @classmethod
    def from_function(cls, host: MultipartiteHost, rule: Callable[[int, int], int]) -> 'TwoColoring':
        return cls(host, tuple(rule(u, v) for u, v in host.pairs))

    @classmethod
    def from_mask(cls, host: MultipartiteHost, mask: int) -> 'TwoColoring':
        if mask < 0 or mask >> host.edge_count:
            raise ColoringError(f"Mask {mask} does not fit {host.edge_count} edges")
        return cls(host, tuple(1 + (mask >> i & 1) for i in range(host.edge_count)))

    @classmethod
    def from_edge_colors(cls, host: MultipartiteHost, edge_colors: Iterable[tuple[int, int, int]]) -> 'TwoColoring':
        assigned: dict[int, int] = {}
        for u, v, color in edge_colors:
            index = host.pair_index(u, v)
            check_color(color)
            if index in assigned and assigned[index] != color:
                raise DualColorError(f"Edge {u}-{v} carries both colors")
            assigned[index] = color
        if len(assigned) != host.edge_count:
            missing = next(pair for i, pair in enumerate(host.pairs) if i not in assigned)
            raise IncompleteColoringError(f"Coloring is not total: edge {missing[0]}-{missing[1]} has no color")
        return cls(host, tuple(assigned[i] for i in range(host.edge_count)))

    def to_mask(self) -> int:
        mask = 0
        for i, color in enumerate(self.colors):
            if color == BLUE:
                mask |= 1 << i
        return mask

    def to_bitstring(self) -> str:
        return ''.join('1' if c == BLUE else '0' for c in self.colors)

    def swapped(self) -> 'TwoColoring':
        return TwoColoring(self.host, tuple(other_color(c) for c in self.colors))

    def edges_of(self, color: int) -> list[tuple[int, int]]:
        check_color(color)
        return [pair for pair, c in zip(self.host.pairs, self.colors) if c == color]

    def subgraph(self, color: int) -> 'ColorSubgraph':
        return ColorSubgraph(self, check_color(color))


def color_of(c: TwoColoring, u: int, v: int) -> int:
    """Color of the cross-part edge uv (symmetric in u, v)."""
    return c.colors[c.host.pair_index(u, v)]


@dataclass(frozen=True)
class ColorSubgraph:
    coloring: TwoColoring
    color: int

    @property
    def host(self) -> MultipartiteHost:
        return self.coloring.host

    @property
    def vertex_count(self) -> int:
        return self.host.N

    def edges(self) -> list[tuple[int, int]]:
        return self.coloring.edges_of(self.color)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighborhood bitmask of every vertex in this color"""
        adj = [0] * self.host.N
        for u, v in self.edges():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.host.N))
        graph.add_edges_from(self.edges())
        return graph


def as_networkx(g) -> nx.Graph:
    if isinstance(g, nx.Graph):
        return g
    if isinstance(g, ColorSubgraph):
        return g.to_networkx()
    raise TypeError(f"Expected a ColorSubgraph or networkx.Graph, got {type(g).__name__}")


def components(g) -> list[frozenset[int]]:
    """Connected components, ordered by smallest vertex."""
    comps = [frozenset(c) for c in nx.connected_components(as_networkx(g))]
    return sorted(comps, key=min)


def blocks(g) -> list[frozenset[int]]:
    """Blocks (maximal 2-connected subgraphs and bridges); isolated vertices have none."""
    found = [frozenset(b) for b in nx.biconnected_components(as_networkx(g))]
    return sorted(found, key=lambda b: sorted(b))


def largest_block_order(g) -> int:
    return max((len(b) for b in blocks(g)), default=0)


def degree_in_color(c: TwoColoring, color: int, v: int, restrict: Optional[Iterable[int]] = None) -> int:
    """Number of `color` edges from v, optionally only into `restrict`."""
    host = c.host
    host.check_vertex(v)
    check_color(color)
    if restrict is None:
        targets = range(host.N)
    else:
        targets = {host.check_vertex(w) for w in restrict}
    part = host.part_index
    return sum(1 for w in targets if part[w] != part[v] and color_of(c, v, w) == color)


def relabeled(c: TwoColoring, permutation: Mapping[int, int]) -> TwoColoring:
    """Coloring obtained by moving vertex v to permutation[v] (must preserve parts)."""
    host = c.host
    if sorted(permutation) != list(range(host.N)) or sorted(permutation.values()) != list(range(host.N)):
        raise ColoringError("Relabeling must be a permutation of all vertices")
    if any(host.part_index[v] != host.part_index[w] for v, w in permutation.items()):
        raise ColoringError("Relabeling must keep every vertex inside its part")
    recolored = {}
    for (u, v), color in zip(host.pairs, c.colors):
        recolored[host.pair_index(permutation[u], permutation[v])] = color
    return TwoColoring(host, tuple(recolored[i] for i in range(host.edge_count)))
