"""
Arithmetic conditions (1)-(7) on part sizes and which monochromatic-structure
theorems they make applicable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from finders.witness import StructureKind
from graphs.multipartite import build_host
from utils.robust_utils import logger, HostError

CONDITION_TEXT = {
    1: 'N >= 3n-1',
    2: 'N - n_1 >= 2n-1',
    3: 'N >= 3n',
    4: 'if N - n_1 - n_2 <= 2 then n_1 >= 2n-1',
    5: 'if N - n_1 - n_2 <= 1 then n_1 + N >= 6n-2',
    6: 'if n_3 = 0 then n_1 >= 2n+1',
    7: 'if N - n_1 - n_2 <= 2 then N >= 4n-1',
}

# target key -> conditions the theorem for it needs
REQUIREMENTS = {
    'C_2n': (1, 2, 7),
    'C_>=2n': (1, 2, 4, 5),
    'P_2n': (1, 2),
    'P_2n+1': (2, 3, 6),
}

# example -> (target key, condition it witnesses the necessity of)
EXAMPLE_THEOREMS = {
    1: ('P_2n', 1),
    2: ('P_2n', 2),
    3: ('P_2n+1', 3),
    4: ('C_>=2n', 4),
    5: ('C_>=2n', 5),
    6: ('P_2n+1', 6),
    7: ('C_2n', 7),
}


@dataclass(frozen=True)
class ConditionReport:
    n: int
    part_sizes: tuple[int, ...]
    conditions: dict = field(default_factory=dict)
    applicable: dict = field(default_factory=dict)
    failing: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(self.conditions.values())

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'part_sizes': list(self.part_sizes),
            'conditions': {str(k): v for k, v in self.conditions.items()},
            'applicable': dict(self.applicable),
            'failing': {k: list(v) for k, v in self.failing.items()},
        }


def conditions_report(n: int, part_sizes) -> ConditionReport:
    if not isinstance(n, int) or n < 1:
        raise HostError(f"n must be a positive integer, got {n!r}")
    host = build_host(part_sizes)
    sizes = host.part_sizes
    N, n1 = host.N, sizes[0]
    n2 = sizes[1] if host.s > 1 else 0
    rest = N - n1 - n2

    flags = {
        1: N >= 3 * n - 1,
        2: N - n1 >= 2 * n - 1,
        3: N >= 3 * n,
        4: rest > 2 or n1 >= 2 * n - 1,
        5: rest > 1 or n1 + N >= 6 * n - 2,
        6: host.s != 2 or n1 >= 2 * n + 1,
        7: rest > 2 or N >= 4 * n - 1,
    }
    failing = {key: tuple(c for c in needs if not flags[c]) for key, needs in REQUIREMENTS.items()}
    applicable = {key: not bad for key, bad in failing.items()}

    logger.debug(f"Conditions for n={n} on {host.describe()}: "
                 f"failing {[c for c, ok in flags.items() if not ok]}")
    return ConditionReport(n, sizes, flags, applicable, failing)


def target_key(kind, size: int, n: int) -> str:
    """Map a (kind, size) target at half-length n onto a REQUIREMENTS key."""
    kind = StructureKind.parse(kind)
    if kind is StructureKind.PATH and size == 2 * n:
        return 'P_2n'
    if kind is StructureKind.PATH and size == 2 * n + 1:
        return 'P_2n+1'
    if kind is StructureKind.CYCLE and size == 2 * n:
        return 'C_2n'
    if kind is StructureKind.CYCLE_AT_LEAST and size == 2 * n:
        return 'C_>=2n'
    raise HostError(f"No theorem covers {kind.label(size)} at n={n}")


def theorem_for_example(k: int) -> tuple[str, int]:
    """(target key, condition) pair whose necessity example k demonstrates."""
    if k not in EXAMPLE_THEOREMS:
        raise HostError(f"Unknown example {k}")
    return EXAMPLE_THEOREMS[k]
