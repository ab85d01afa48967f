"""
Monochromatic structure search over both color classes of a 2-coloring.
"""

from __future__ import annotations

from typing import Optional

from finders.bitgraph import BitGraph, check_search_cap
from finders.matching import connected_matching_number
from finders.paths import find_cycle_at_least, find_cycle_exact, find_path_exact
from finders.witness import StructureKind, StructureWitness
from graphs.multipartite import COLORS, TwoColoring
from utils.robust_utils import logger, SearchError


def search_structure(g, kind, size: int, cap: Optional[int] = None) -> Optional[StructureWitness]:
    """Witness of `kind` with `size` in g, or None."""
    kind = StructureKind.parse(kind)
    if kind is StructureKind.PATH:
        return find_path_exact(g, size, cap)
    if kind is StructureKind.CYCLE:
        return find_cycle_exact(g, size, cap)
    if kind is StructureKind.CYCLE_AT_LEAST:
        return find_cycle_at_least(g, size, cap)

    if size < 1:
        raise SearchError(f"Connected matching size must be at least 1, got {size}")
    number, witness = connected_matching_number(g)
    if number < size:
        return None
    return StructureWitness('connected_matching', edges=witness.edges[:size], component=witness.component)


def check_target_cap(host_vertices: int, kind, cap: Optional[int] = None) -> None:
    """Fail early when path/cycle kinds would exceed the exact search cap."""
    if StructureKind.parse(kind) is not StructureKind.CONNECTED_MATCHING:
        check_search_cap(BitGraph(tuple(range(host_vertices)), (0,) * host_vertices), cap)


def mono_search(c: TwoColoring, kind, size: int, cap: Optional[int] = None) -> Optional[tuple[int, StructureWitness]]:
    """First monochromatic witness, trying red before blue; None is authoritative."""
    kind = StructureKind.parse(kind)
    check_target_cap(c.host.N, kind, cap)
    for color in COLORS:
        witness = search_structure(c.subgraph(color), kind, size, cap)
        if witness is not None:
            logger.debug(f"Mono {kind.label(size)} found in color {color} on {c.host.describe()}")
            return color, witness.with_color(color)
    logger.debug(f"No mono {kind.label(size)} on {c.host.describe()}")
    return None


def mono_search_bitgraphs(graphs: tuple[BitGraph, BitGraph], kind: StructureKind, size: int,
                          cap: Optional[int] = None) -> Optional[tuple[int, StructureWitness]]:
    """mono_search on prebuilt color classes (red, blue); used by the enumeration kernels."""
    for color, bg in zip(COLORS, graphs):
        witness = search_structure(bg, kind, size, cap)
        if witness is not None:
            return color, witness.with_color(color)
    return None
