#!/usr/bin/env python3
"""
Command-line driver for the multipartite 2-coloring workbench.

Exit codes: 0 success (structure present, condition holds, certificate valid),
1 negative verdict (structure absent, condition fails, certificate invalid,
counterexample found), 2 usage or input error, 3 search/enumeration cap exceeded.
"""

import argparse
import sys
from pathlib import Path

# Add the project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from certificates.absence import certificate_report, covers_imply, validate
from constructions.examples import generate
from finders.mono import mono_search
from finders.witness import StructureKind
from frontier.conditions import REQUIREMENTS, conditions_report, CONDITION_TEXT
from frontier.enumeration import SYMMETRY_MODES, EnumerationOptions, enumerate_verify, frontier_rows
from frontier.heuristic import counterexample_search
from graphs.multipartite import COLOR_NAMES, build_host
from hamiltonicity.bipartite import (
    BalancedBipartite, berge_certifier, chvatal_certifier, hamiltonian_cycle, las_vergnas_certifier,
)
from serialization.dot_export import export_dot
from serialization.instance_file import InstanceFile, read_instance_file, write_instance_file
from serialization.reports import json_report, write_frontier_csv
from utils.pdf_generator import PDFGenerator
from utils.robust_utils import logger, WorkbenchError, create_error_report, exit_code_for

TARGETS = ['path', 'cycle', 'cycle-min', 'cmatching']


def parse_parts(text):
    try:
        parts = [int(p) for p in text.split(',') if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"part sizes must be comma-separated integers, got {text!r}")
    if not parts:
        raise argparse.ArgumentTypeError("part sizes must not be empty")
    return parts


def parse_range(text):
    try:
        lo, hi = text.split('..')
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like A..B, got {text!r}")


def emit(report):
    print(json_report(report))


def cmd_generate(args):
    kwargs = {}
    if args.example in (1, 3) and args.parts is not None:
        kwargs['part_sizes'] = args.parts
    elif args.example == 1:
        raise WorkbenchError("example 1 needs --parts (summing to 3n-2)")
    elif args.example == 2:
        if args.n1 is None:
            raise WorkbenchError("example 2 needs --n1")
        kwargs['n1'] = args.n1
        if args.parts is not None:
            kwargs['other_parts'] = args.parts
    elif args.parts is not None:
        raise WorkbenchError(f"example {args.example} has a fixed host; drop --parts")

    instance = generate(args.example, args.n, **kwargs)
    path = write_instance_file(args.output, instance, args.encoding)
    emit({
        'example': instance.example,
        'n': instance.n,
        'host': instance.host.describe(),
        'edges': instance.host.edge_count,
        'output': str(path),
    })
    return 0


def cmd_check(args):
    instance = read_instance_file(args.file)
    kind = StructureKind.parse(args.target)
    found = mono_search(instance.coloring, kind, args.size, args.cap)
    report = {
        'host': instance.host.describe(),
        'target': kind.label(args.size),
        'found': found is not None,
        'color': COLOR_NAMES[found[0]] if found else None,
        'witness': found[1].to_dict() if found else None,
    }
    emit(report)
    return 0 if found else 1


def cmd_certify(args):
    instance = read_instance_file(args.file)
    report = certificate_report(instance.host, instance.coloring, instance.certificates)
    valid = [c for c in instance.certificates if validate(instance.host, instance.coloring, c)]
    claims = [{
        'color': a.color,
        'structure': a.kind.label(a.size),
        'certified': any(c.color == a.color and covers_imply(c, a.kind, a.size) for c in valid),
    } for a in instance.claimed_absences]
    emit({
        'host': instance.host.describe(),
        'certificates': report,
        'claimed_absences': claims,
        'all_valid': all(r['valid'] for r in report),
    })
    return 0 if all(r['valid'] for r in report) else 1


def cmd_ham(args):
    instance = read_instance_file(args.file)
    H = BalancedBipartite.from_color_subgraph(instance.coloring, args.color)
    if args.theorem == 'chvatal':
        verdict = chvatal_certifier(H)
    elif args.theorem == 'berge':
        verdict = berge_certifier(H)
    else:
        verdict = las_vergnas_certifier(H, args.q)

    report = {
        'host': instance.host.describe(),
        'color': COLOR_NAMES[args.color],
        'theorem': args.theorem,
        'q': args.q if args.theorem == 'lasvergnas' else None,
        'm': H.m,
        'u_degrees': H.sorted_u_degrees(),
        'v_degrees': H.sorted_v_degrees(),
        'verdict': verdict.value,
    }
    if args.search:
        cycle = hamiltonian_cycle(H, args.cap)
        report['hamiltonian_cycle'] = list(cycle.vertices) if cycle else None
    emit(report)
    return 0 if verdict else 1


def cmd_conditions(args):
    report = conditions_report(args.n, args.parts)
    data = report.to_dict()
    data['condition_text'] = {str(k): v for k, v in CONDITION_TEXT.items()}
    emit(data)
    if args.target:
        return 0 if report.applicable[args.target] else 1
    return 0 if report.all_hold else 1


def cmd_verify(args):
    start, end = args.range if args.range else (0, None)
    options = EnumerationOptions(
        start=start, end=end, workers=args.threads, symmetry=args.symmetry,
        max_colorings=args.max_colorings, cap=args.cap,
    )
    summary = enumerate_verify(args.parts, args.target, args.size, options)
    report = summary.to_dict()

    witness_file = ''
    if args.witness and summary.counterexample is not None:
        host = summary.counterexample.host
        write_instance_file(args.witness, InstanceFile(host, summary.counterexample))
        witness_file = str(args.witness)
        report['witness_file'] = witness_file
    if args.csv:
        write_frontier_csv(frontier_rows([summary], {0: witness_file}), args.csv)
    if args.pdf:
        report['pdf'] = PDFGenerator().generate_verdict_report([summary], args.pdf)

    emit(report)
    return 0 if summary.holds else 1


def cmd_export_dot(args):
    instance = read_instance_file(args.file)
    text = export_dot(instance.host, instance.coloring, instance.named_sets)
    if args.output:
        Path(args.output).write_text(text)
        logger.info(f"Wrote DOT file {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_search(args):
    host = build_host(args.parts)
    coloring = counterexample_search(host, args.target, args.size, args.budget, args.seed, cap=args.cap)
    kind = StructureKind.parse(args.target)
    report = {
        'host': host.describe(),
        'target': kind.label(args.size),
        'found_counterexample': coloring is not None,
        'bits': coloring.to_bitstring() if coloring else None,
    }
    if coloring is not None and args.output:
        write_instance_file(args.output, InstanceFile(host, coloring))
        report['output'] = str(args.output)
    emit(report)
    return 1 if coloring is not None else 0


def build_parser():
    parser = argparse.ArgumentParser(prog='cli.py', description="Multipartite 2-coloring workbench")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('generate', help="write an extremal example instance")
    p.add_argument('--example', type=int, required=True, choices=range(1, 8))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--parts', type=parse_parts, help="part sizes (examples 1, 3) or parts outside U_1 (example 2)")
    p.add_argument('--n1', type=int, help="size of U_1 (example 2)")
    p.add_argument('--encoding', choices=['bitstring', 'edges'], default='bitstring')
    p.add_argument('-o', '--output', required=True)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser('check', help="search both colors for a structure")
    p.add_argument('file')
    p.add_argument('--target', choices=TARGETS, required=True)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--cap', type=int)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser('certify', help="validate embedded absence certificates")
    p.add_argument('file')
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser('ham', help="bipartite Hamiltonicity degree conditions on one color")
    p.add_argument('file')
    p.add_argument('--theorem', choices=['chvatal', 'berge', 'lasvergnas'], required=True)
    p.add_argument('--q', type=int, default=0)
    p.add_argument('--color', type=int, choices=[1, 2], default=1)
    p.add_argument('--search', action='store_true', help="also run the exact Hamiltonian cycle search")
    p.add_argument('--cap', type=int)
    p.set_defaults(handler=cmd_ham)

    p = sub.add_parser('conditions', help="evaluate conditions (1)-(7)")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--parts', type=parse_parts, required=True)
    p.add_argument('--target', choices=sorted(REQUIREMENTS))
    p.set_defaults(handler=cmd_conditions)

    p = sub.add_parser('verify', help="exhaustively check every coloring of a host")
    p.add_argument('--parts', type=parse_parts, required=True)
    p.add_argument('--target', choices=TARGETS, required=True)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--range', type=parse_range)
    p.add_argument('--threads', type=int)
    p.add_argument('--symmetry', choices=SYMMETRY_MODES, default='none')
    p.add_argument('--max-colorings', type=int)
    p.add_argument('--cap', type=int)
    p.add_argument('--csv')
    p.add_argument('--witness')
    p.add_argument('--pdf')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('export-dot', help="write Graphviz DOT for an instance")
    p.add_argument('file')
    p.add_argument('-o', '--output')
    p.set_defaults(handler=cmd_export_dot)

    p = sub.add_parser('search', help="local search for a coloring avoiding a structure")
    p.add_argument('--parts', type=parse_parts, required=True)
    p.add_argument('--target', choices=TARGETS, required=True)
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--budget', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--cap', type=int)
    p.add_argument('-o', '--output')
    p.set_defaults(handler=cmd_search)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        return args.handler(args)
    except (WorkbenchError, ValueError) as e:
        report = create_error_report(args.command, e)
        print(json_report(report), file=sys.stderr)
        return exit_code_for(e)


if __name__ == '__main__':
    sys.exit(main())
