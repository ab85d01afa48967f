"""
Absence certificates: small objects, checkable in linear time, proving that a
color class cannot contain a structure.

Certificates are always supplied (by a generator or a user file), never
computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from finders.witness import StructureKind
from graphs.multipartite import MultipartiteHost, TwoColoring, components, blocks, check_color
from utils.robust_utils import logger, CertificateError, ColoringError


@dataclass(frozen=True)
class VertexCover:
    """Every edge of `color` has an endpoint in `vertices`, and |vertices| <= bound."""
    color: int
    vertices: frozenset
    bound: int

    type_name = 'vertex_cover'


@dataclass(frozen=True)
class ComponentBound:
    """Every component of `color` has at most `bound` vertices."""
    color: int
    bound: int

    type_name = 'component_bound'


@dataclass(frozen=True)
class BlockBound:
    """Every block of `color` has at most `bound` vertices."""
    color: int
    bound: int

    type_name = 'block_bound'


AbsenceCertificate = Union[VertexCover, ComponentBound, BlockBound]


def vertex_cover(color: int, vertices, bound: int) -> VertexCover:
    return VertexCover(color, frozenset(vertices), bound)


def _check_shape(host: MultipartiteHost, cert) -> None:
    if not isinstance(cert, (VertexCover, ComponentBound, BlockBound)):
        raise CertificateError(f"Unknown certificate {cert!r}")
    try:
        check_color(cert.color)
    except ColoringError as e:
        raise CertificateError(str(e)) from e
    if not isinstance(cert.bound, int) or cert.bound < 0:
        raise CertificateError(f"Certificate bound must be a nonnegative integer, got {cert.bound!r}")
    if isinstance(cert, VertexCover):
        bad = [v for v in cert.vertices if not isinstance(v, int) or not 0 <= v < host.N]
        if bad:
            raise CertificateError(f"Vertex cover names unknown vertices {sorted(bad, key=str)}")


def validate(host: MultipartiteHost, coloring: TwoColoring, cert) -> bool:
    """True iff the certificate's invariant holds on the actual color class."""
    _check_shape(host, cert)
    if coloring.host != host:
        raise CertificateError("Coloring belongs to a different host")

    if isinstance(cert, VertexCover):
        if len(cert.vertices) > cert.bound:
            return False
        cover = cert.vertices
        ok = all(u in cover or v in cover for u, v in coloring.edges_of(cert.color))
    elif isinstance(cert, ComponentBound):
        ok = all(len(c) <= cert.bound for c in components(coloring.subgraph(cert.color)))
    else:
        ok = all(len(b) <= cert.bound for b in blocks(coloring.subgraph(cert.color)))

    logger.debug(f"Certificate {describe(cert)} on {host.describe()}: {'valid' if ok else 'invalid'}")
    return ok


def implied_absences(cert) -> list[tuple[StructureKind, int]]:
    """(kind, minimal forbidden size) pairs a valid certificate rules out in its color."""
    if isinstance(cert, VertexCover):
        k = cert.bound
        return [
            (StructureKind.CONNECTED_MATCHING, k + 1),
            (StructureKind.PATH, 2 * k + 2),
            (StructureKind.PATH, 2 * k + 3),
            (StructureKind.CYCLE_AT_LEAST, 2 * k + 2),
        ]
    if isinstance(cert, ComponentBound):
        m = cert.bound
        return [
            (StructureKind.PATH, m + 1),
            (StructureKind.CYCLE_AT_LEAST, m + 1),
            (StructureKind.CONNECTED_MATCHING, m // 2 + 1),
        ]
    if isinstance(cert, BlockBound):
        return [(StructureKind.CYCLE_AT_LEAST, cert.bound + 1)]
    raise CertificateError(f"Unknown certificate {cert!r}")


def covers_imply(cert, kind, size: int) -> bool:
    """Whether a valid cert rules out `kind` of `size` in its color."""
    kind = StructureKind.parse(kind)
    for implied_kind, smallest in implied_absences(cert):
        if size < smallest:
            continue
        if implied_kind is kind:
            return True
        # no C_{>=b} means no C_s for any s >= b
        if implied_kind is StructureKind.CYCLE_AT_LEAST and kind is StructureKind.CYCLE:
            return True
    return False


def describe(cert) -> str:
    if isinstance(cert, VertexCover):
        return f"VertexCover(color={cert.color}, |S|={len(cert.vertices)}, k={cert.bound})"
    if isinstance(cert, ComponentBound):
        return f"ComponentBound(color={cert.color}, m={cert.bound})"
    return f"BlockBound(color={cert.color}, b={cert.bound})"


def certificate_report(host: MultipartiteHost, coloring: TwoColoring, certs) -> list[dict]:
    report = []
    for cert in certs:
        valid = validate(host, coloring, cert)
        report.append({
            'certificate': describe(cert),
            'type': cert.type_name,
            'color': cert.color,
            'valid': valid,
            'implied_absences': [
                {'kind': kind.value, 'size': size, 'label': kind.label(size)}
                for kind, size in implied_absences(cert)
            ] if valid else [],
        })
    return report
