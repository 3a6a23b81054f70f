"""
Command-line entry point for the RPQ lab

Usage:
    python -m rpq_lab.cli.main eval --graph g.txt --query "a a + b" --semantics shortest
    python -m rpq_lab.cli.main oracle --graph g.txt --query "a*" --max-len 2
    python -m rpq_lab.cli.main check --seed 7 --trials 100
    python -m rpq_lab.cli.main inclusions
    python -m rpq_lab.cli.main bench
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from pydantic import ValidationError

from rpq_lab.config.config import LOG_LEVEL, RESULT_CAP
from rpq_lab.core.errors import InputError, ResultCapError, RpqLabError
from rpq_lab.core.graph_io import load_costs, load_database
from rpq_lab.lab.bench import bench_table, run_bench
from rpq_lab.lab.inclusions import check_inclusions, inclusion_table
from rpq_lab.lab.models import GenParams
from rpq_lab.lab.properties import PROPERTY_NAMES
from rpq_lab.lab.runner import cross_check_table, matrix_table, run_matrix
from rpq_lab.matcher.matches import matches_upto
from rpq_lab.problems.flashlight import Flashlight
from rpq_lab.rpq.parser import parse_query
from rpq_lab.semantics.evaluate import evaluate
from rpq_lab.semantics.oracle import oracle
from rpq_lab.semantics.spec import SemanticsId, SemanticsSpec

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _add_endpoint_args(parser: argparse.ArgumentParser):
    parser.add_argument('--source', type=str, default=None, help='Only walks starting at this vertex')
    parser.add_argument('--target', type=str, default=None, help='Only walks ending at this vertex')


def _add_lab_args(parser: argparse.ArgumentParser):
    defaults = GenParams()
    parser.add_argument('--seed', type=int, default=defaults.seed, help=f'Random seed (default: {defaults.seed})')
    parser.add_argument('--trials', type=int, default=defaults.trials,
                        help=f'Random trials per check (default: {defaults.trials})')
    parser.add_argument('--max-v', type=int, default=defaults.max_vertices,
                        help=f'Max vertices of random databases (default: {defaults.max_vertices})')
    parser.add_argument('--max-e', type=int, default=defaults.max_edges,
                        help=f'Max edges of random databases (default: {defaults.max_edges})')
    parser.add_argument('--alphabet', type=int, default=defaults.alphabet,
                        help=f'Number of labels (default: {defaults.alphabet})')
    parser.add_argument('--depth', type=int, default=defaults.depth,
                        help=f'Max height of random queries (default: {defaults.depth})')
    parser.add_argument('--output', type=str, default=None, help='Also save the full report as JSON')


def parse_arguments(argv: Optional[List[str]] = None):
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        description='RPQ lab - walk semantics for regular path queries',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Shortest matches of a a + b
  python -m rpq_lab.cli.main eval --graph g.txt --query "a a + b" --semantics shortest

  # Stream trails from v1 in depth-first order
  python -m rpq_lab.cli.main eval --graph g.txt --query "a*" --semantics trail --source v1 --stream

  # Cheapest walks with a cost table
  python -m rpq_lab.cli.main eval --graph g.txt --query "(a + b)*" --semantics cheapest --costs costs.txt

  # Every match up to length 2
  python -m rpq_lab.cli.main oracle --graph g.txt --query "a*" --max-len 2

  # Property matrix, restricted to two properties, report saved as JSON
  python -m rpq_lab.cli.main check --trials 50 --property monotony --property co-monotony --output matrix.json

Exit codes: 0 ok, 1 expectation mismatch, 2 input error, 3 result cap exceeded.
        """
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p_eval = sub.add_parser('eval', help='Evaluate a query under a semantics')
    p_eval.add_argument('--graph', type=str, required=True, help='Graph file (V/E lines)')
    p_eval.add_argument('--query', type=str, required=True, help='Query, e.g. "a (b + c)*"')
    p_eval.add_argument('--semantics', type=str, required=True,
                        help='Semantics token or short name (e.g. shortest, Sh, trail, shvc)')
    _add_endpoint_args(p_eval)
    p_eval.add_argument('--cap', type=int, default=None, help=f'Result cap (default: {RESULT_CAP})')
    p_eval.add_argument('--stream', action='store_true', help='Emit walks in flashlight order as found')
    p_eval.add_argument('--costs', type=str, default=None, help='Cost file for the cheapest semantics')
    p_eval.add_argument('--default-cost', type=int, default=None, help='Cost of labels missing from --costs')

    p_oracle = sub.add_parser('oracle', help='List matches up to a length, or a semantics by definition')
    p_oracle.add_argument('--graph', type=str, required=True, help='Graph file (V/E lines)')
    p_oracle.add_argument('--query', type=str, required=True, help='Query')
    p_oracle.add_argument('--max-len', type=int, default=None, help='Length bound for the match listing')
    p_oracle.add_argument('--semantics', type=str, default=None,
                          help='Evaluate this semantics from its definition instead')
    _add_endpoint_args(p_oracle)

    p_check = sub.add_parser('check', help='Run the property matrix')
    _add_lab_args(p_check)
    p_check.add_argument('--property', action='append', default=None, choices=PROPERTY_NAMES,
                         help='Restrict to this property (repeatable)')
    p_check.add_argument('--only', action='append', default=None, dest='only_semantics',
                         help='Restrict to this semantics (repeatable)')

    p_incl = sub.add_parser('inclusions', help='Check the inclusion lattice')
    _add_lab_args(p_incl)

    p_bench = sub.add_parser('bench', help='Time evaluation on scaling families')
    _add_lab_args(p_bench)

    return parser.parse_args(argv)


def _endpoints(args):
    if args.source is None and args.target is None:
        return None
    return (args.source, args.target)


def _params(args) -> GenParams:
    return GenParams(
        seed=args.seed,
        trials=args.trials,
        max_vertices=args.max_v,
        max_edges=args.max_e,
        alphabet=args.alphabet,
        depth=args.depth,
    )


def save_report(report, output_path: str):
    """Save report to file"""
    os.makedirs(os.path.dirname(output_path) if os.path.dirname(output_path) else '.', exist_ok=True)
    with open(output_path, 'w', encoding='utf-8') as f:
        json.dump(report, f, indent=2, ensure_ascii=False)
    print(f"\n✅ Report saved to: {output_path}", file=sys.stderr)


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_eval(args) -> int:
    db = load_database(args.graph)
    regex = parse_query(args.query)
    costs = load_costs(args.costs) if args.costs else None
    spec = SemanticsSpec.of(args.semantics, costs=costs, default_cost=args.default_cost, cap=args.cap)
    endpoints = _endpoints(args)
    if not args.stream:
        result = evaluate(db, regex, spec, endpoints)
        for line in result.lines():
            print(line)
        print(f"COUNT {len(result)}")
        return EXIT_OK

    if spec.id is SemanticsId.CHEAPEST:
        spec.check_costs(db)
    cap = spec.cap if spec.cap is not None else RESULT_CAP
    light = Flashlight(db, regex, spec)
    for w in light.enumerate(args.source, args.target):
        if light.emitted > cap:
            raise ResultCapError(cap, "streamed result")
        print(w, flush=True)
    print(f"COUNT {light.emitted}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    db = load_database(args.graph)
    regex = parse_query(args.query)
    if args.semantics is not None:
        result = oracle(db, regex, SemanticsSpec.of(args.semantics), _endpoints(args), cap=RESULT_CAP)
    elif args.max_len is not None:
        result = matches_upto(db, regex, args.max_len, _endpoints(args), cap=RESULT_CAP)
    else:
        raise InputError("oracle needs --max-len or --semantics")
    for line in result.lines():
        print(line)
    print(f"COUNT {len(result)}")
    return EXIT_OK


def cmd_check(args) -> int:
    params = _params(args)
    semantics = [SemanticsId.from_token(t) for t in args.only_semantics] if args.only_semantics else None
    result = run_matrix(params, props=args.property, semantics=semantics)

    print(f"# property matrix  seed={params.seed}  trials={params.trials}")
    print(matrix_table(result))
    cross = cross_check_table(result)
    if cross:
        print()
        print(cross)
    print()
    for report in result.reports:
        print(report.line())
    if args.output:
        save_report(result.model_dump(mode="json"), args.output)

    if not result.ok:
        for row in result.mismatches:
            print(f"⚠️  {row.prop} / {row.semantics}: expected {row.expected.value}, got {row.verdict.value}",
                  file=sys.stderr)
        print(f"\n❌ {len(result.mismatches)} expectation mismatches", file=sys.stderr)
        return EXIT_MISMATCH
    print("\n✨ Property matrix matches expectations", file=sys.stderr)
    return EXIT_OK


def cmd_inclusions(args) -> int:
    params = _params(args)
    reports = check_inclusions(params)
    print(f"# inclusion lattice  seed={params.seed}  trials={params.trials}")
    print(inclusion_table(reports))
    print()
    for report in reports:
        print(report.line())
    if args.output:
        save_report([r.model_dump(mode="json") for r in reports], args.output)
    if not all(r.ok for r in reports):
        print("\n❌ Inclusion lattice differs from expectations", file=sys.stderr)
        return EXIT_MISMATCH
    print("\n✨ Inclusion lattice matches expectations", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    params = _params(args)
    records = run_bench(params)
    print(f"# benchmarks  seed={params.seed}")
    print(bench_table(records))
    print()
    for record in records:
        print(record.line())
    if args.output:
        save_report([r.model_dump(mode="json") for r in records], args.output)
    return EXIT_OK


COMMANDS = {
    'eval': cmd_eval,
    'oracle': cmd_oracle,
    'check': cmd_check,
    'inclusions': cmd_inclusions,
    'bench': cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main execution function"""
    args = parse_arguments(argv)
    logging.basicConfig(
        level=LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except ResultCapError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ValidationError) as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except RpqLabError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    exit(main())
