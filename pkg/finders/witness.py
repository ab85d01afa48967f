"""
Structure kinds and witnesses returned by the finders.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from finders.bitgraph import as_bitgraph


class StructureKind(str, Enum):
    PATH = 'P_exact'
    CYCLE = 'C_exact'
    CYCLE_AT_LEAST = 'C_at_least'
    CONNECTED_MATCHING = 'M_connected'

    @classmethod
    def parse(cls, value) -> 'StructureKind':
        if isinstance(value, cls):
            return value
        aliases = {
            'path': cls.PATH, 'cycle': cls.CYCLE, 'cycle-min': cls.CYCLE_AT_LEAST,
            'cmatching': cls.CONNECTED_MATCHING,
        }
        if value in aliases:
            return aliases[value]
        return cls(value)

    def label(self, size: int) -> str:
        return {
            StructureKind.PATH: f'P_{size}', StructureKind.CYCLE: f'C_{size}',
            StructureKind.CYCLE_AT_LEAST: f'C_>={size}', StructureKind.CONNECTED_MATCHING: f'M_{size}',
        }[self]


@dataclass(frozen=True)
class StructureWitness:
    """A path or cycle (vertex order) or a matching (edges, plus its component id)."""
    kind: str
    vertices: tuple = ()
    edges: tuple = ()
    component: Optional[int] = None
    color: Optional[int] = None

    @property
    def size(self) -> int:
        if self.kind in ('path', 'cycle'):
            return len(self.vertices)
        return len(self.edges)

    def with_color(self, color: int) -> 'StructureWitness':
        return StructureWitness(self.kind, self.vertices, self.edges, self.component, color)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'vertices': list(self.vertices),
            'edges': [list(e) for e in self.edges],
            'component': self.component,
            'color': self.color,
        }


def validate_witness(g, witness: StructureWitness) -> bool:
    """Independent check that the witness is a genuine structure of g."""
    bg = as_bitgraph(g)
    index = {label: i for i, label in enumerate(bg.labels)}

    if witness.kind in ('path', 'cycle'):
        seq = witness.vertices
        if not seq or any(v not in index for v in seq) or len(set(seq)) != len(seq):
            return False
        idx = [index[v] for v in seq]
        if any(not bg.has_edge(a, b) for a, b in zip(idx, idx[1:])):
            return False
        if witness.kind == 'cycle':
            return len(idx) >= 3 and bg.has_edge(idx[-1], idx[0])
        return True

    if witness.kind in ('matching', 'connected_matching'):
        seen = set()
        for u, v in witness.edges:
            if u not in index or v not in index or u == v or not bg.has_edge(index[u], index[v]):
                return False
            if u in seen or v in seen:
                return False
            seen.update((u, v))
        if witness.kind == 'connected_matching' and witness.edges:
            comps = bg.component_masks()
            touched = {next(i for i, c in enumerate(comps) if c >> index[u] & 1) for u, _ in witness.edges}
            return len(touched) == 1
        return True

    return False
