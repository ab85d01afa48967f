"""
Local search for colorings that avoid a monochromatic target.

The energy of a coloring counts monochromatic copies of the target in each
color, capped at `count_limit` per color; connected matchings contribute how far
the largest one reaches past size - 1. Energy 0 means no monochromatic target.
Random restarts are followed by single-edge color flips: a flip is kept when the
energy does not grow, and otherwise with probability exp(-increase / temperature).
Every evaluation counts against the budget.
"""

from __future__ import annotations

from itertools import islice
from math import exp
from typing import Optional

import numpy as np

from config import config
from finders.matching import connected_matching_number
from finders.mono import check_target_cap, mono_search
from finders.paths import iter_cycles, iter_paths
from finders.witness import StructureKind
from graphs.multipartite import COLORS, MultipartiteHost, TwoColoring, build_host
from utils.robust_utils import logger, SearchError


def _copies(g, kind: StructureKind, size: int, limit: int, cap) -> int:
    if kind is StructureKind.CONNECTED_MATCHING:
        return max(0, connected_matching_number(g)[0] - (size - 1))
    if kind is StructureKind.PATH:
        found = iter_paths(g, size, cap)
    elif kind is StructureKind.CYCLE:
        found = iter_cycles(g, size, size, cap)
    else:
        found = iter_cycles(g, size, None, cap)
    return sum(1 for _ in islice(found, limit))


def coloring_energy(coloring: TwoColoring, kind, size: int, limit: Optional[int] = None, cap=None) -> int:
    """Monochromatic copies of the target over both colors; 0 exactly when none exists."""
    kind = StructureKind.parse(kind)
    limit = int(config.get('heuristic', 'count_limit', 2000)) if limit is None else limit
    return sum(_copies(coloring.subgraph(color), kind, size, max(1, limit), cap) for color in COLORS)


def counterexample_search(host, kind, size: int, budget: Optional[int] = None, seed: Optional[int] = None,
                          patience: Optional[int] = None, cap: Optional[int] = None) -> Optional[TwoColoring]:
    """A coloring of host with no monochromatic target, or None within the budget."""
    if not isinstance(host, MultipartiteHost):
        host = build_host(host)
    kind = StructureKind.parse(kind)
    budget = int(config.get('heuristic', 'budget', 2000)) if budget is None else budget
    seed = int(config.get('heuristic', 'seed', 0)) if seed is None else seed
    patience = int(config.get('heuristic', 'patience', 200)) if patience is None else patience
    temperature = float(config.get('heuristic', 'temperature', 0.5))
    limit = int(config.get('heuristic', 'count_limit', 2000))
    if budget <= 0:
        return None
    check_target_cap(host.N, kind, cap)

    rng = np.random.default_rng(seed)
    edge_count = host.edge_count
    evaluations = 0
    restarts = 0

    def evaluate(colors) -> tuple[TwoColoring, int]:
        nonlocal evaluations
        evaluations += 1
        coloring = TwoColoring(host, tuple(int(c) for c in colors))
        return coloring, coloring_energy(coloring, kind, size, limit, cap)

    while evaluations < budget:
        restarts += 1
        colors = rng.integers(1, 3, size=edge_count)
        coloring, current = evaluate(colors)
        best = current
        stale = 0
        while current > 0 and evaluations < budget and stale < patience:
            i = int(rng.integers(edge_count))
            colors[i] = 3 - colors[i]
            candidate, energy = evaluate(colors)
            if energy <= current or rng.random() < exp(-(energy - current) / temperature):
                coloring, current = candidate, energy
            else:
                colors[i] = 3 - colors[i]
            if current < best:
                best, stale = current, 0
            else:
                stale += 1

        if current == 0:
            if mono_search(coloring, kind, size, cap) is not None:
                raise SearchError("Local search returned a coloring that contains the target")
            logger.info(f"Found a coloring of {host.describe()} without mono {kind.label(size)} "
                        f"after {evaluations} evaluations ({restarts} restarts)")
            return coloring

    logger.info(f"No coloring of {host.describe()} without mono {kind.label(size)} "
                f"within {budget} evaluations")
    return None
