"""
JSON instance files (format version 1).

    {"format_version": 1,
     "part_sizes": [n_1, ..., n_s],
     "coloring": {"encoding": "bitstring", "bits": "0110..."}
               | {"encoding": "edges", "edges": [[u, v, color], ...]},
     "named_sets": {"U_1": [0, 1, 2], ...},
     "certificates": [{"type": "vertex_cover", "color": 1, "vertices": [...], "bound": 2}, ...],
     "claimed_absences": [{"color": 1, "kind": "P_exact", "size": 4}, ...],
     "example": 6, "n": 2}

Bit i of the bitstring is cross pair i in lexicographic order, '0' red and '1'
blue. Everything is validated on load; failures raise InstanceFormatError with
a code naming the problem. A certificate that is well formed but false still
loads; `certify` reports it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from certificates.absence import BlockBound, ComponentBound, VertexCover, vertex_cover
from constructions.examples import ClaimedAbsence, ExtremalInstance
from finders.witness import StructureKind
from graphs.multipartite import COLORS, MultipartiteHost, TwoColoring, build_host
from utils.robust_utils import logger, DualColorError, HostError, IncompleteColoringError, InstanceFormatError

FORMAT_VERSION = 1
CERTIFICATE_TYPES = {
    VertexCover.type_name: VertexCover,
    ComponentBound.type_name: ComponentBound,
    BlockBound.type_name: BlockBound,
}


@dataclass(frozen=True)
class InstanceFile:
    host: MultipartiteHost
    coloring: TwoColoring
    named_sets: dict = field(default_factory=dict)
    certificates: tuple = ()
    claimed_absences: tuple = ()
    example: Optional[int] = None
    n: Optional[int] = None


def from_extremal(instance: ExtremalInstance) -> InstanceFile:
    return InstanceFile(
        host=instance.host,
        coloring=instance.coloring,
        named_sets={name: tuple(sorted(vs)) for name, vs in instance.named_sets.items()},
        certificates=tuple(instance.certificates),
        claimed_absences=tuple(instance.claimed_absences),
        example=instance.example,
        n=instance.n,
    )


def _certificate_dict(cert) -> dict:
    data = {'type': cert.type_name, 'color': cert.color}
    if isinstance(cert, VertexCover):
        data['vertices'] = sorted(cert.vertices)
    data['bound'] = cert.bound
    return data


def serialize_instance(instance, encoding: str = 'bitstring') -> str:
    """Deterministic JSON text for an InstanceFile (or ExtremalInstance)."""
    if isinstance(instance, ExtremalInstance):
        instance = from_extremal(instance)
    if encoding == 'bitstring':
        coloring = {'encoding': 'bitstring', 'bits': instance.coloring.to_bitstring()}
    elif encoding == 'edges':
        coloring = {
            'encoding': 'edges',
            'edges': [[u, v, c] for (u, v), c in zip(instance.host.pairs, instance.coloring.colors)],
        }
    else:
        raise ValueError(f"Unknown coloring encoding {encoding!r}")

    data = {
        'format_version': FORMAT_VERSION,
        'part_sizes': list(instance.host.part_sizes),
        'coloring': coloring,
        'named_sets': {name: sorted(vs) for name, vs in instance.named_sets.items()},
        'certificates': [_certificate_dict(c) for c in instance.certificates],
        'claimed_absences': [
            {'color': a.color, 'kind': a.kind.value, 'size': a.size} for a in instance.claimed_absences
        ],
        'example': instance.example,
        'n': instance.n,
    }
    return json.dumps(data, indent=2) + '\n'


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_host(data) -> MultipartiteHost:
    sizes = data.get('part_sizes')
    if not isinstance(sizes, list) or not all(_is_int(n) for n in sizes):
        raise InstanceFormatError('malformed', "part_sizes must be a list of integers")
    try:
        return build_host(sizes)
    except HostError as e:
        raise InstanceFormatError('malformed', str(e)) from e


def _parse_bitstring(host: MultipartiteHost, bits) -> TwoColoring:
    if not isinstance(bits, str):
        raise InstanceFormatError('malformed', "bits must be a string")
    if len(bits) != host.edge_count:
        raise InstanceFormatError(
            'length_mismatch', f"bitstring has {len(bits)} characters, host has {host.edge_count} cross pairs")
    bad = next((ch for ch in bits if ch not in '01'), None)
    if bad is not None:
        raise InstanceFormatError('unknown_color', f"bitstring character {bad!r} is not 0 or 1")
    return TwoColoring(host, tuple(2 if ch == '1' else 1 for ch in bits))


def _parse_edges(host: MultipartiteHost, edges) -> TwoColoring:
    if not isinstance(edges, list):
        raise InstanceFormatError('malformed', "edges must be a list of [u, v, color] triples")
    triples = []
    for entry in edges:
        if not isinstance(entry, list) or len(entry) != 3 or not all(_is_int(x) for x in entry):
            raise InstanceFormatError('malformed', f"edge entry {entry!r} is not [u, v, color]")
        u, v, color = entry
        if color not in COLORS:
            raise InstanceFormatError('unknown_color', f"edge {u}-{v} has color {color}")
        if not (0 <= u < host.N and 0 <= v < host.N) or host.part_index[u] == host.part_index[v]:
            raise InstanceFormatError('invalid_vertex', f"{u}-{v} is not a cross pair of {host.describe()}")
        triples.append((u, v, color))
    try:
        return TwoColoring.from_edge_colors(host, triples)
    except DualColorError as e:
        raise InstanceFormatError('dual_color', str(e)) from e
    except IncompleteColoringError as e:
        raise InstanceFormatError('incomplete', str(e)) from e


def _parse_coloring(host: MultipartiteHost, data) -> TwoColoring:
    coloring = data.get('coloring')
    if not isinstance(coloring, dict):
        raise InstanceFormatError('malformed', "coloring must be an object")
    encoding = coloring.get('encoding')
    if encoding == 'bitstring':
        return _parse_bitstring(host, coloring.get('bits'))
    if encoding == 'edges':
        return _parse_edges(host, coloring.get('edges'))
    raise InstanceFormatError('malformed', f"unknown coloring encoding {encoding!r}")


def _parse_vertices(host: MultipartiteHost, values, where: str, code: str) -> tuple[int, ...]:
    if not isinstance(values, list):
        raise InstanceFormatError('malformed', f"{where} must be a list of vertices")
    bad = [v for v in values if not _is_int(v) or not 0 <= v < host.N]
    if bad:
        raise InstanceFormatError(code, f"{where} names vertices outside 0..{host.N - 1}: {bad}")
    return tuple(sorted(set(values)))


def _parse_certificate(host: MultipartiteHost, entry):
    if not isinstance(entry, dict) or entry.get('type') not in CERTIFICATE_TYPES:
        raise InstanceFormatError('invalid_certificate', f"unknown certificate {entry!r}")
    color, bound = entry.get('color'), entry.get('bound')
    if color not in COLORS or not _is_int(color):
        raise InstanceFormatError('invalid_certificate', f"certificate color {color!r} is not 1 or 2")
    if not _is_int(bound) or bound < 0:
        raise InstanceFormatError('invalid_certificate', f"certificate bound {bound!r} is not a nonnegative integer")
    if entry['type'] == VertexCover.type_name:
        vertices = _parse_vertices(host, entry.get('vertices'), 'vertex cover', 'invalid_certificate')
        return vertex_cover(color, vertices, bound)
    return CERTIFICATE_TYPES[entry['type']](color, bound)


def _parse_claims(data) -> tuple:
    claims = []
    for entry in data.get('claimed_absences') or []:
        try:
            claims.append(ClaimedAbsence(entry['color'], StructureKind.parse(entry['kind']), int(entry['size'])))
        except (KeyError, TypeError, ValueError) as e:
            raise InstanceFormatError('malformed', f"bad claimed absence {entry!r}") from e
        if claims[-1].color not in COLORS:
            raise InstanceFormatError('unknown_color', f"claimed absence color {claims[-1].color!r}")
    return tuple(claims)


def load_instance(text: str) -> InstanceFile:
    """Parse and validate instance JSON text."""
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, TypeError) as e:
        raise InstanceFormatError('malformed', f"not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise InstanceFormatError('malformed', "instance must be a JSON object")
    if data.get('format_version') != FORMAT_VERSION:
        raise InstanceFormatError(
            'unsupported_version', f"format_version {data.get('format_version')!r} is not {FORMAT_VERSION}")

    host = _parse_host(data)
    coloring = _parse_coloring(host, data)

    named = data.get('named_sets') or {}
    if not isinstance(named, dict):
        raise InstanceFormatError('malformed', "named_sets must be an object")
    named_sets = {
        str(name): _parse_vertices(host, values, f"named set {name}", 'invalid_vertex')
        for name, values in named.items()
    }
    certificates = data.get('certificates') or []
    if not isinstance(certificates, list):
        raise InstanceFormatError('malformed', "certificates must be a list")

    instance = InstanceFile(
        host=host,
        coloring=coloring,
        named_sets=named_sets,
        certificates=tuple(_parse_certificate(host, c) for c in certificates),
        claimed_absences=_parse_claims(data),
        example=data.get('example'),
        n=data.get('n'),
    )
    logger.debug(f"Loaded instance on {host.describe()} with {len(instance.certificates)} certificates")
    return instance


def parse_instance(text: str):
    """(host, coloring, certificates) of instance JSON text."""
    instance = load_instance(text)
    return instance.host, instance.coloring, instance.certificates


def read_instance_file(path) -> InstanceFile:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InstanceFormatError('malformed', f"cannot read {path}: {e}") from e
    return load_instance(text)


def write_instance_file(path, instance, encoding: str = 'bitstring') -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_instance(instance, encoding))
    logger.info(f"Wrote instance file {path}")
    return path
