"""
Exact path and cycle search.

Searches extend a vertex sequence depth-first, trying neighbors in ascending
order, so the first sequence found is the lexicographically smallest one.
Up to `dp_vertex_limit` vertices every failed (visited set, last vertex) state
is remembered, which turns the backtracking into the subset dynamic program;
larger graphs (only reachable with a raised cap) run without the table.
"""

from __future__ import annotations

from typing import Iterator, Optional

from config import config
from finders.bitgraph import BitGraph, as_bitgraph, check_search_cap, iter_bits, lowest_bit, reach_mask
from finders.witness import StructureWitness
from utils.robust_utils import logger, SearchError


class _SequenceSearch:
    """Depth-first extension of a vertex sequence inside `allowed`."""

    def __init__(self, adj, allowed: int, length: int, close_to: Optional[int] = None, memo: bool = True):
        self.adj = adj
        self.allowed = allowed
        self.length = length
        self.close_to = close_to
        self.dead: Optional[dict[int, int]] = {} if memo else None
        self.path: list[int] = []

    def run(self, start: int) -> Optional[list[int]]:
        self.path = [start]
        if self._extend(1 << start):
            return list(self.path)
        return None

    def _extend(self, mask: int) -> bool:
        path = self.path
        last = path[-1]
        if len(path) == self.length:
            return self.close_to is None or bool(self.adj[last] >> self.close_to & 1)
        if self.dead is not None and self.dead.get(mask, 0) >> last & 1:
            return False

        free = self.allowed & ~mask
        if reach_mask(self.adj, last, free).bit_count() >= self.length - len(path):
            for w in iter_bits(self.adj[last] & free):
                path.append(w)
                if self._extend(mask | (1 << w)):
                    return True
                path.pop()

        if self.dead is not None:
            self.dead[mask] = self.dead.get(mask, 0) | (1 << last)
        return False


def _use_memo(bg: BitGraph) -> bool:
    return bg.n <= config.dp_vertex_limit()


def _path_indices(bg: BitGraph, k: int) -> Optional[list[int]]:
    if k > bg.n:
        return None
    if k == 1:
        return [0] if bg.n else None

    big = [c for c in bg.component_masks() if c.bit_count() >= k]
    if not big:
        return None
    searches = {c: _SequenceSearch(bg.adj, c, k, memo=_use_memo(bg)) for c in big}
    union = 0
    for c in big:
        union |= c
    for s in iter_bits(union):
        comp = next(c for c in big if c >> s & 1)
        found = searches[comp].run(s)
        if found is not None:
            return found
    return None


def _cycle_indices(bg: BitGraph, k: int, block_list: Optional[list[int]] = None) -> Optional[list[int]]:
    if k > bg.n:
        return None
    block_list = bg.block_masks() if block_list is None else block_list
    big = [b for b in block_list if b.bit_count() >= k]
    if not big:
        return None
    union = 0
    for b in big:
        union |= b
    memo = _use_memo(bg)
    for s in iter_bits(union):
        above = ~((1 << s) - 1)
        best = None
        for b in big:
            allowed = b & above
            if not allowed >> s & 1 or allowed.bit_count() < k:
                continue
            found = _SequenceSearch(bg.adj, allowed, k, close_to=s, memo=memo).run(s)
            if found is not None and (best is None or found < best):
                best = found
        if best is not None:
            return best
    return None


def find_path_exact(g, k: int, cap: Optional[int] = None) -> Optional[StructureWitness]:
    """A path on exactly k vertices, or None when g has none."""
    if k < 1:
        raise SearchError(f"Path order must be at least 1, got {k}")
    bg = as_bitgraph(g)
    check_search_cap(bg, cap)
    found = _path_indices(bg, k)
    logger.debug(f"Path search P_{k} on {bg.n} vertices: {'found' if found else 'none'}")
    if found is None:
        return None
    return StructureWitness('path', vertices=bg.label_sequence(found))


def find_cycle_exact(g, k: int, cap: Optional[int] = None) -> Optional[StructureWitness]:
    """A cycle on exactly k vertices, or None when g has none."""
    if k < 3:
        raise SearchError(f"Cycle length must be at least 3, got {k}")
    bg = as_bitgraph(g)
    check_search_cap(bg, cap)
    found = _cycle_indices(bg, k)
    logger.debug(f"Cycle search C_{k} on {bg.n} vertices: {'found' if found else 'none'}")
    if found is None:
        return None
    return StructureWitness('cycle', vertices=bg.label_sequence(found))


def find_cycle_at_least(g, k: int, cap: Optional[int] = None) -> Optional[StructureWitness]:
    """The shortest-length cycle on at least k vertices, or None."""
    if k < 3:
        raise SearchError(f"Cycle length must be at least 3, got {k}")
    bg = as_bitgraph(g)
    check_search_cap(bg, cap)
    block_list = bg.block_masks()
    largest = max((b.bit_count() for b in block_list), default=0)
    for length in range(k, largest + 1):
        found = _cycle_indices(bg, length, block_list)
        if found is not None:
            logger.debug(f"Cycle search C_>={k} on {bg.n} vertices: found length {length}")
            return StructureWitness('cycle', vertices=bg.label_sequence(found))
    logger.debug(f"Cycle search C_>={k} on {bg.n} vertices: none (largest block {largest})")
    return None


def iter_cycles(g, min_length: int = 3, max_length: Optional[int] = None,
                cap: Optional[int] = None) -> Iterator[tuple]:
    """
    Every cycle of g once, as a vertex sequence starting at its smallest vertex
    whose second vertex is smaller than its last.
    """
    bg = as_bitgraph(g)
    check_search_cap(bg, cap)
    top = bg.n if max_length is None else min(max_length, bg.n)
    lo = max(3, min_length)
    adj = bg.adj

    def walk(path, mask, allowed):
        last = path[-1]
        if len(path) >= lo and adj[last] >> path[0] & 1 and path[1] < last:
            yield bg.label_sequence(path)
        if len(path) == top:
            return
        for w in iter_bits(adj[last] & allowed & ~mask):
            path.append(w)
            yield from walk(path, mask | (1 << w), allowed)
            path.pop()

    for s in range(bg.n):
        allowed = bg.all_mask & ~((1 << s) - 1)
        yield from walk([s], 1 << s, allowed)


def iter_paths(g, k: int, cap: Optional[int] = None) -> Iterator[tuple]:
    """Every path on exactly k vertices once, as a sequence whose first vertex is below its last."""
    if k < 1:
        raise SearchError(f"Path order must be at least 1, got {k}")
    bg = as_bitgraph(g)
    check_search_cap(bg, cap)
    adj = bg.adj

    def walk(path, mask):
        if len(path) == k:
            if k == 1 or path[0] < path[-1]:
                yield bg.label_sequence(path)
            return
        for w in iter_bits(adj[path[-1]] & ~mask):
            path.append(w)
            yield from walk(path, mask | (1 << w))
            path.pop()

    for s in range(bg.n):
        yield from walk([s], 1 << s)


def longest_path_order(g, cap: Optional[int] = None) -> int:
    """Number of vertices of a longest path (0 for the empty graph)."""
    bg = as_bitgraph(g)
    check_search_cap(bg, cap)
    best = 0
    for k in range(1, bg.n + 1):
        if _path_indices(bg, k) is None:
            break
        best = k
    return best


def longest_cycle_order(g, cap: Optional[int] = None) -> int:
    """Length of a longest cycle (0 when g is a forest)."""
    bg = as_bitgraph(g)
    check_search_cap(bg, cap)
    block_list = bg.block_masks()
    largest = max((b.bit_count() for b in block_list), default=0)
    for k in range(largest, 2, -1):
        if _cycle_indices(bg, k, block_list) is not None:
            return k
    return 0


class _HamiltonCycleSearch:
    """Hamiltonian cycle of G[allowed] containing every required edge."""

    def __init__(self, adj, allowed: int, required):
        self.adj = adj
        self.allowed = allowed
        self.req = required
        self.dead: dict[int, int] = {}
        self.path: list[int] = []
        self.start = lowest_bit(allowed)

    def run(self) -> Optional[list[int]]:
        s = self.start
        if self.allowed.bit_count() < 3:
            return None
        if self.req[s]:
            seconds = [lowest_bit(self.req[s])]
        else:
            seconds = list(iter_bits(self.adj[s] & self.allowed))
        for t in seconds:
            if not self.adj[s] >> t & 1:
                continue
            self.path = [s, t]
            mask = (1 << s) | (1 << t)
            if self._arrival_ok(t, s, mask) and self._extend(mask):
                return list(self.path)
        return None

    def _arrival_ok(self, w: int, prev: int, mask: int) -> bool:
        for r in iter_bits(self.req[w] & mask):
            if r == prev:
                continue
            # the only other visited partner allowed is the start, via the closing edge
            if r != self.start or mask != self.allowed:
                return False
        return True

    def _extend(self, mask: int) -> bool:
        path = self.path
        last = path[-1]
        if mask == self.allowed:
            if not self.adj[last] >> self.start & 1:
                return False
            partners = self.req[self.start] & ~((1 << path[1]) | (1 << last))
            return partners == 0
        if self.dead.get(mask, 0) >> last & 1:
            return False

        free = self.allowed & ~mask
        pending = self.req[last] & free
        if pending.bit_count() <= 1 and reach_mask(self.adj, last, free) == free:
            candidates = pending if pending else self.adj[last] & free
            for w in iter_bits(candidates):
                path.append(w)
                nxt = mask | (1 << w)
                if self._arrival_ok(w, last, nxt) and self._extend(nxt):
                    return True
                path.pop()

        self.dead[mask] = self.dead.get(mask, 0) | (1 << last)
        return False


def hamiltonian_cycle_indices(bg: BitGraph, required_edges=()) -> Optional[list[int]]:
    """Hamiltonian cycle of bg through the (index) edges in required_edges, or None."""
    req = [0] * bg.n
    for u, v in required_edges:
        req[u] |= 1 << v
        req[v] |= 1 << u
    return _HamiltonCycleSearch(bg.adj, bg.all_mask, req).run()
