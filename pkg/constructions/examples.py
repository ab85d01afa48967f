"""
Extremal 2-edge-colorings of complete multipartite graphs.

Each generator returns an ExtremalInstance: the host, the coloring, the named
vertex sets the construction is phrased in, the absence certificates it
supports and the monochromatic structures it claims to avoid. Named sets take
the first vertices of a part (or of the remaining vertices) so that output is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from certificates.absence import BlockBound, ComponentBound, vertex_cover
from finders.witness import StructureKind
from graphs.multipartite import BLUE, RED, COLORS, MultipartiteHost, TwoColoring, build_host, color_of
from utils.robust_utils import logger, HostError


@dataclass(frozen=True)
class ClaimedAbsence:
    color: int
    kind: StructureKind
    size: int

    def label(self) -> str:
        return f"{'red' if self.color == RED else 'blue'} {self.kind.label(self.size)}"


@dataclass(frozen=True)
class ExtremalInstance:
    example: int
    n: int
    host: MultipartiteHost
    coloring: TwoColoring
    named_sets: dict = field(default_factory=dict)
    certificates: tuple = ()
    claimed_absences: tuple = ()
    target: Optional[tuple] = None
    condition: str = ''


def _claims(colors, items):
    return tuple(ClaimedAbsence(color, kind, size) for color in colors for kind, size in items)


def _no_connected_matching(n):
    return [
        (StructureKind.CONNECTED_MATCHING, n),
        (StructureKind.PATH, 2 * n),
        (StructureKind.PATH, 2 * n + 1),
        (StructureKind.CYCLE_AT_LEAST, 2 * n),
    ]


def _require_n(n, least):
    if not isinstance(n, int) or n < least:
        raise HostError(f"n must be an integer >= {least}, got {n!r}")


def gen_example1(n: int, part_sizes) -> ExtremalInstance:
    """Too few vertices: N = 3n-2, red = G[U_1, U_2] with |U_1| = 2n-1, |U_2| = n-1."""
    _require_n(n, 2)
    sizes = list(part_sizes)
    if sum(sizes) != 3 * n - 2:
        raise HostError(f"Example 1 needs part sizes summing to 3n-2 = {3 * n - 2}, got {sum(sizes)}")
    host = build_host(sizes)
    u1 = tuple(range(2 * n - 1))
    u2 = tuple(range(2 * n - 1, host.N))
    boundary = 2 * n - 1

    coloring = TwoColoring.from_function(host, lambda u, v: RED if u < boundary <= v else BLUE)
    logger.info(f"Generated example 1 for n={n} on {host.describe()}")
    return ExtremalInstance(
        example=1, n=n, host=host, coloring=coloring,
        named_sets={'U_1': u1, 'U_2': u2},
        certificates=(vertex_cover(RED, u2, n - 1), ComponentBound(BLUE, 2 * n - 1)),
        claimed_absences=_claims(COLORS, _no_connected_matching(n)),
        target=(StructureKind.PATH, 2 * n), condition='(1)',
    )


def gen_example2(n: int, n1: int, other_parts=None) -> ExtremalInstance:
    """Too few vertices outside V_1: red = every edge at U_2, blue covered by U_3."""
    _require_n(n, 2)
    if not isinstance(n1, int) or n1 < 1:
        raise HostError(f"n1 must be a positive integer, got {n1!r}")
    others = [n - 1, n - 1] if other_parts is None else list(other_parts)
    if sum(others) != 2 * n - 2:
        raise HostError(f"Parts outside U_1 must sum to 2n-2 = {2 * n - 2}, got {sum(others)}")
    host = build_host([n1] + others)

    first = host.part_sizes.index(n1)
    u1 = tuple(host.parts()[first])
    rest = [v for v in range(host.N) if v not in u1]
    u2, u3 = tuple(rest[:n - 1]), tuple(rest[n - 1:])
    in_u2 = set(u2)

    coloring = TwoColoring.from_function(host, lambda u, v: RED if u in in_u2 or v in in_u2 else BLUE)
    logger.info(f"Generated example 2 for n={n}, n1={n1} on {host.describe()}")
    return ExtremalInstance(
        example=2, n=n, host=host, coloring=coloring,
        named_sets={'U_1': u1, 'U_2': u2, 'U_3': u3},
        certificates=(vertex_cover(RED, u2, n - 1), vertex_cover(BLUE, u3, n - 1)),
        claimed_absences=_claims(COLORS, _no_connected_matching(n)),
        target=(StructureKind.PATH, 2 * n), condition='(2)',
    )


def gen_example3(n: int, part_sizes=None) -> ExtremalInstance:
    """No red M_n and no blue P_{2n+1} on 3n-1 vertices (K_{3n-1} by default)."""
    _require_n(n, 2)
    sizes = [1] * (3 * n - 1) if part_sizes is None else list(part_sizes)
    if sum(sizes) != 3 * n - 1:
        raise HostError(f"Example 3 needs part sizes summing to 3n-1 = {3 * n - 1}, got {sum(sizes)}")
    host = build_host(sizes)
    boundary = 2 * n
    u1, u2 = tuple(range(boundary)), tuple(range(boundary, host.N))

    coloring = TwoColoring.from_function(host, lambda u, v: RED if u < boundary <= v else BLUE)
    logger.info(f"Generated example 3 for n={n} on {host.describe()}")
    return ExtremalInstance(
        example=3, n=n, host=host, coloring=coloring,
        named_sets={'U_1': u1, 'U_2': u2},
        certificates=(vertex_cover(RED, u2, n - 1), ComponentBound(BLUE, 2 * n)),
        claimed_absences=(
            _claims((RED,), _no_connected_matching(n))
            + _claims((BLUE,), [(StructureKind.PATH, 2 * n + 1)])
        ),
        target=(StructureKind.PATH, 2 * n + 1), condition='(3)',
    )


def _example4_layout(n):
    v1 = tuple(range(0, 2 * n - 2))
    v2 = tuple(range(2 * n - 2, 4 * n - 4))
    return {
        "V'_1": v1[:n - 1], "V''_1": v1[n - 1:],
        "V'_2": v2[:n - 1], "V''_2": v2[n - 1:],
        'x': (4 * n - 4,), 'y': (4 * n - 3,),
    }


def gen_example4(n: int) -> ExtremalInstance:
    """K_{2n-2,2n-2,1,1} with x a cut vertex of the red graph; no mono C_{>=2n}."""
    _require_n(n, 2)
    host = build_host([2 * n - 2, 2 * n - 2, 1, 1])
    sets = _example4_layout(n)
    x = sets['x'][0]
    side = {v: 0 for v in sets["V'_1"] + sets["V'_2"]}
    side.update({v: 1 for v in sets["V''_1"] + sets["V''_2"]})

    def rule(u, v):
        if x in (u, v):
            return RED
        if u in side and v in side and side[u] == side[v]:
            return RED
        return BLUE

    coloring = TwoColoring.from_function(host, rule)
    logger.info(f"Generated example 4 for n={n} on {host.describe()}")
    return ExtremalInstance(
        example=4, n=n, host=host, coloring=coloring, named_sets=sets,
        certificates=(BlockBound(RED, 2 * n - 1), BlockBound(BLUE, 2 * n - 1)),
        claimed_absences=_claims(COLORS, [(StructureKind.CYCLE_AT_LEAST, 2 * n)]),
        target=(StructureKind.CYCLE_AT_LEAST, 2 * n), condition='(4)',
    )


def gen_example5(n: int) -> ExtremalInstance:
    """Example 4's coloring restricted to K_{2n-1,2n-2,1} (V_1 and y merged into one part)."""
    _require_n(n, 2)
    big = gen_example4(n)
    host = build_host([2 * n - 1, 2 * n - 2, 1])
    old = big.named_sets
    # new part 1 = V_1 then y, part 2 = V_2, part 3 = x
    old_of = list(old["V'_1"] + old["V''_1"] + old['y'] + old["V'_2"] + old["V''_2"] + old['x'])
    new_of = {o: i for i, o in enumerate(old_of)}

    coloring = TwoColoring.from_function(host, lambda u, v: color_of(big.coloring, old_of[u], old_of[v]))
    sets = {name: tuple(sorted(new_of[o] for o in members)) for name, members in old.items()}
    logger.info(f"Generated example 5 for n={n} on {host.describe()}")
    return ExtremalInstance(
        example=5, n=n, host=host, coloring=coloring, named_sets=sets,
        certificates=big.certificates,
        claimed_absences=big.claimed_absences,
        target=(StructureKind.CYCLE_AT_LEAST, 2 * n), condition='(5)',
    )


def gen_example6(n: int) -> ExtremalInstance:
    """K_{2n,2n} split into two red K_{n,n} and two blue K_{n,n}; no mono P_{2n+1}."""
    _require_n(n, 1)
    host = build_host([2 * n, 2 * n])
    v1, v2 = tuple(range(2 * n)), tuple(range(2 * n, 4 * n))
    sets = {"V'_1": v1[:n], "V''_1": v1[n:], "V'_2": v2[:n], "V''_2": v2[n:]}
    first_half = set(sets["V'_1"] + sets["V'_2"])

    coloring = TwoColoring.from_function(
        host, lambda u, v: RED if (u in first_half) == (v in first_half) else BLUE)
    logger.info(f"Generated example 6 for n={n} on {host.describe()}")
    return ExtremalInstance(
        example=6, n=n, host=host, coloring=coloring, named_sets=sets,
        certificates=(ComponentBound(RED, 2 * n), ComponentBound(BLUE, 2 * n)),
        claimed_absences=_claims(COLORS, [(StructureKind.PATH, 2 * n + 1)]),
        target=(StructureKind.PATH, 2 * n + 1), condition='(6)',
    )


def gen_example7(n: int) -> ExtremalInstance:
    """K_{2n-1,2n-3,1,1}: no mono C_{2n}, while every blue cycle longer than 2n-1 is odd."""
    _require_n(n, 2)
    host = build_host([2 * n - 1, 2 * n - 3, 1, 1])
    v1 = tuple(range(0, 2 * n - 1))
    v2 = tuple(range(2 * n - 1, 4 * n - 4))
    sets = {
        'v_1': v1[:1], 'A': v1[1:n], 'B': v1[n:],
        'C': v2[:n - 1], 'D': v2[n - 1:],
        'x': (4 * n - 4,), 'y': (4 * n - 3,),
    }
    first = sets['v_1'][0]
    x, y = sets['x'][0], sets['y'][0]
    a, b, c, d = (set(sets[k]) for k in 'ABCD')

    def rule(u, v):
        if x in (u, v):
            return RED
        if y in (u, v):
            w = u if v == y else v
            return RED if w in b or w in d else BLUE
        if first in (u, v):
            return BLUE
        if (u in a and v in c) or (u in b and v in d):
            return RED
        return BLUE

    coloring = TwoColoring.from_function(host, rule)
    logger.info(f"Generated example 7 for n={n} on {host.describe()}")
    return ExtremalInstance(
        example=7, n=n, host=host, coloring=coloring, named_sets=sets,
        certificates=(BlockBound(RED, 2 * n - 1),),
        claimed_absences=_claims(COLORS, [(StructureKind.CYCLE, 2 * n)]),
        target=(StructureKind.CYCLE, 2 * n), condition='(7)',
    )


GENERATORS: dict[int, Callable[..., ExtremalInstance]] = {
    1: gen_example1,
    2: gen_example2,
    3: gen_example3,
    4: gen_example4,
    5: gen_example5,
    6: gen_example6,
    7: gen_example7,
}


def generate(example: int, n: int, **kwargs) -> ExtremalInstance:
    """Dispatch to the generator of `example` (1..7)."""
    if example not in GENERATORS:
        raise HostError(f"Unknown example {example}; choose one of {sorted(GENERATORS)}")
    return GENERATORS[example](n, **kwargs)
