"""
Graphviz DOT text for a colored host.

Clusters are the named sets when they are given and pairwise disjoint,
otherwise the parts. Output depends only on the input.
"""

from __future__ import annotations

from typing import Optional

from graphs.multipartite import COLOR_NAMES, MultipartiteHost, TwoColoring


def _clusters(host: MultipartiteHost, named_sets: Optional[dict]) -> list[tuple[str, list[int]]]:
    if named_sets:
        seen: set[int] = set()
        disjoint = True
        for members in named_sets.values():
            if seen & set(members):
                disjoint = False
                break
            seen |= set(members)
        if disjoint:
            return [(name, sorted(members)) for name, members in named_sets.items() if members]
    return [(f"V_{i + 1}", list(part)) for i, part in enumerate(host.parts())]


def export_dot(host: MultipartiteHost, coloring: TwoColoring, named_sets: Optional[dict] = None) -> str:
    clusters = _clusters(host, named_sets)
    clustered = {v for _, members in clusters for v in members}

    lines = ['graph coloring {', f'  label="{host.describe()}";', '  node [shape=circle];']
    for k, (name, members) in enumerate(clusters):
        lines.append(f'  subgraph cluster_{k} {{')
        lines.append(f'    label="{name}";')
        lines.append('    ' + ' '.join(f'{v};' for v in members))
        lines.append('  }')
    loose = [v for v in range(host.N) if v not in clustered]
    if loose:
        lines.append('  ' + ' '.join(f'{v};' for v in loose))
    for (u, v), color in zip(host.pairs, coloring.colors):
        lines.append(f'  {u} -- {v} [color={COLOR_NAMES[color]}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
