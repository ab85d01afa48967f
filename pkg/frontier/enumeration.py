"""
Exhaustive verification of "every 2-coloring of the host contains a
monochromatic target" claims.

Colorings are visited in integer order of their bitmask (bit i = color of
cross pair i), so a run over [start, end) can be resumed or split. Chunks are
scanned by a multiprocessing pool when more than one worker is requested;
aggregation is a sum of counts plus the smallest failing index, so serial and
parallel runs report the same summary.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import permutations, product
from math import factorial, prod
from multiprocessing import Pool
from typing import Optional

import numpy as np

from config import config
from finders.bitgraph import BitGraph
from finders.mono import check_target_cap, mono_search, mono_search_bitgraphs
from finders.witness import StructureKind
from graphs.multipartite import MultipartiteHost, TwoColoring, build_host
from utils.robust_utils import logger, EnumerationCapExceeded, SearchError

SYMMETRY_MODES = ('none', 'color', 'full')
_BLOCK = 4096


@dataclass
class EnumerationOptions:
    start: int = 0
    end: Optional[int] = None
    workers: Optional[int] = None
    symmetry: str = 'none'
    max_colorings: Optional[int] = None
    cap: Optional[int] = None
    chunks_per_worker: Optional[int] = None
    max_group_order: Optional[int] = None


@dataclass
class VerdictSummary:
    host: str
    part_sizes: tuple[int, ...]
    kind: StructureKind
    size: int
    start: int
    end: int
    symmetry: str
    colorings: int
    failures: int
    representatives: int
    counterexample_index: Optional[int] = None
    counterexample: Optional[TwoColoring] = None
    wall_time_s: float = 0.0
    finished_at: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    @property
    def target(self) -> str:
        return self.kind.label(self.size)

    @property
    def holds(self) -> bool:
        """Every examined coloring contains the target."""
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            'host': self.host,
            'part_sizes': list(self.part_sizes),
            'target': self.target,
            'kind': self.kind.value,
            'size': self.size,
            'range': [self.start, self.end],
            'symmetry': self.symmetry,
            'colorings': self.colorings,
            'failures': self.failures,
            'representatives': self.representatives,
            'counterexample_index': self.counterexample_index,
            'counterexample_bits': self.counterexample.to_bitstring() if self.counterexample else None,
            'timestamp': {'finished_at': self.finished_at, 'wall_time_s': round(self.wall_time_s, 3)},
        }


def group_order(host: MultipartiteHost) -> int:
    """Order of (within-part permutations) x (color swap)."""
    return 2 * prod(factorial(n) for n in host.part_sizes)


def _permutation_weights(host: MultipartiteHost) -> np.ndarray:
    """E x |G| matrix: column g holds 2**image(i) for every pair index i."""
    parts = host.parts()
    columns = []
    for choice in product(*(permutations(p) for p in parts)):
        image = {}
        for part, moved in zip(parts, choice):
            image.update(zip(part, moved))
        columns.append([1 << host.pair_index(image[u], image[v]) for u, v in host.pairs])
    return np.array(columns, dtype=np.int64).T


def _representatives(masks: np.ndarray, edge_count: int, symmetry: str, weights: Optional[np.ndarray]):
    """(masks that are their orbit's minimum, orbit sizes) for one block of masks."""
    full = (1 << edge_count) - 1
    if symmetry == 'none':
        return masks, np.ones(len(masks), dtype=np.int64)
    if symmetry == 'color':
        keep = masks[((masks >> (edge_count - 1)) & 1) == 0]
        return keep, np.full(len(keep), 2, dtype=np.int64)

    bits = (masks[:, None] >> np.arange(edge_count, dtype=np.int64)) & 1
    images = bits @ weights
    images = np.concatenate([images, full - images], axis=1)
    keep = images.min(axis=1) == masks
    ordered = np.sort(images[keep], axis=1)
    orbit = 1 + (np.diff(ordered, axis=1) != 0).sum(axis=1)
    return masks[keep], orbit.astype(np.int64)


def _color_classes(pairs, n: int, mask: int) -> tuple[BitGraph, BitGraph]:
    red, blue = [0] * n, [0] * n
    for i, (u, v) in enumerate(pairs):
        adj = blue if mask >> i & 1 else red
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    labels = tuple(range(n))
    return BitGraph(labels, tuple(red)), BitGraph(labels, tuple(blue))


def _scan_chunk(args) -> tuple[int, int, Optional[int], int]:
    """Scan [lo, hi); returns (weighted colorings, weighted failures, first failing mask, representatives)."""
    part_sizes, kind, size, lo, hi, symmetry, cap = args
    host = MultipartiteHost(tuple(part_sizes))
    kind = StructureKind.parse(kind)
    edge_count = host.edge_count
    pairs = host.pairs
    weights = _permutation_weights(host) if symmetry == 'full' else None

    examined = failures = searched = 0
    first_fail = None
    for block_lo in range(lo, hi, _BLOCK):
        masks = np.arange(block_lo, min(hi, block_lo + _BLOCK), dtype=np.int64)
        reps, orbit = _representatives(masks, edge_count, symmetry, weights)
        for mask, weight in zip(reps.tolist(), orbit.tolist()):
            searched += 1
            examined += weight
            graphs = _color_classes(pairs, host.N, mask)
            if mono_search_bitgraphs(graphs, kind, size, cap) is None:
                failures += weight
                if first_fail is None:
                    first_fail = mask
    logger.info(f"Chunk [{lo}, {hi}) of {host.describe()}: {examined} colorings, {failures} without "
                f"{kind.label(size)}, {searched} searched")
    return examined, failures, first_fail, searched


def _chunk_bounds(start: int, end: int, pieces: int) -> list[tuple[int, int]]:
    edges = np.unique(np.linspace(start, end, pieces + 1).astype(np.int64))
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def enumerate_verify(host, kind, size: int, options: Optional[EnumerationOptions] = None) -> VerdictSummary:
    """Run the mono search on every coloring in the index range and summarize."""
    options = options or EnumerationOptions()
    if not isinstance(host, MultipartiteHost):
        host = build_host(host)
    kind = StructureKind.parse(kind)
    check_target_cap(host.N, kind, options.cap)

    total = 1 << host.edge_count
    start = options.start
    end = total if options.end is None else options.end
    if not 0 <= start <= end <= total:
        raise SearchError(f"Index range [{start}, {end}) is outside [0, {total})")

    limit = config.max_colorings() if options.max_colorings is None else options.max_colorings
    if end - start > limit:
        logger.warning(f"Enumeration refused: {end - start} colorings exceed the cap {limit}")
        raise EnumerationCapExceeded(f"{end - start} colorings exceed the enumeration cap {limit}")

    symmetry = options.symmetry
    if symmetry not in SYMMETRY_MODES:
        raise SearchError(f"Unknown symmetry mode {symmetry!r}; choose one of {SYMMETRY_MODES}")
    if symmetry != 'none' and (start, end) != (0, total):
        raise SearchError("Symmetry reduction needs the full index range")
    if symmetry == 'full':
        max_group = options.max_group_order or int(config.get('enumeration', 'max_group_order', 5040))
        if group_order(host) > max_group:
            raise EnumerationCapExceeded(
                f"Symmetry group of order {group_order(host)} exceeds the cap {max_group}")

    workers = options.workers or config.default_workers()
    per_worker = options.chunks_per_worker or int(config.get('enumeration', 'chunks_per_worker', 4))
    bounds = _chunk_bounds(start, end, max(1, workers * per_worker))
    items = [(host.part_sizes, kind.value, size, lo, hi, symmetry, options.cap) for lo, hi in bounds]

    logger.info(f"Enumerating {end - start} colorings of {host.describe()} for {kind.label(size)} "
                f"({len(items)} chunks, {workers} workers, symmetry={symmetry})")
    started = time.time()
    if workers > 1 and len(items) > 1:
        with Pool(processes=min(workers, len(items))) as pool:
            results = pool.map(_scan_chunk, items)
    else:
        results = [_scan_chunk(item) for item in items]

    colorings = sum(r[0] for r in results)
    failures = sum(r[1] for r in results)
    searched = sum(r[3] for r in results)
    fails = [r[2] for r in results if r[2] is not None]
    first_fail = min(fails) if fails else None

    counterexample = None
    if first_fail is not None:
        counterexample = TwoColoring.from_mask(host, first_fail)
        if mono_search(counterexample, kind, size, options.cap) is not None:
            raise SearchError(f"Stored counterexample {first_fail} failed re-verification")

    summary = VerdictSummary(
        host=host.describe(), part_sizes=host.part_sizes, kind=kind, size=size,
        start=start, end=end, symmetry=symmetry,
        colorings=colorings, failures=failures, representatives=searched,
        counterexample_index=first_fail, counterexample=counterexample,
        wall_time_s=time.time() - started,
    )
    logger.info(f"{host.describe()} -> {kind.label(size)}: {failures}/{colorings} colorings lack it "
                f"({summary.wall_time_s:.2f}s)")
    return summary


def frontier_rows(verdicts, witness_files=None) -> list[dict]:
    """CSV rows (parts, n, target, colorings, failures, witness-file) for frontier reports."""
    witness_files = witness_files or {}
    rows = []
    for i, v in enumerate(verdicts):
        rows.append({
            'parts': ','.join(str(p) for p in v.part_sizes),
            'n': v.size if v.kind is StructureKind.CONNECTED_MATCHING else v.size // 2,
            'target': v.target,
            'colorings': v.colorings,
            'failures': v.failures,
            'witness-file': witness_files.get(i, ''),
        })
    return rows
