"""Command line interface.

    wirtwidth compute --gauss <code> [--exact|--heuristic] [--seeds K]
                      [--budget N] [--emit-witness] [--emit-profile]
    wirtwidth census  --input F --output G [--workers W] [--strategy S]
                      [--budget N] [--seeds K] [--heuristic-budget M] [--json]
    wirtwidth verify  --input G
    wirtwidth oracle  --gauss <code> [--guard N] [--dedup]

Exit codes: 0 ok, 1 usage error, 2 I/O error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from ._version import __version__
from .census import run_census, verify_certificates
from .errors import CensusError, GaussCodeError, DiagramError, TooLarge
from .gauss import build_diagram, parse_gauss
from .lift import build_profile, profile_text
from .oracle import oracle_min_width
from .search import (
    DEFAULT_HEURISTIC_BUDGET,
    DEFAULT_NODE_BUDGET,
    DEFAULT_SEED_TARGET,
    KERNEL,
    compute_width,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="wirtwidth", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({KERNEL} kernel)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="width of a single Gauss code")
    c.add_argument("--gauss", required=True, help="Gauss code, e.g. -1,2,-3,1,-2,3")
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="force the exact search")
    mode.add_argument("--heuristic", action="store_true", help="force the seed heuristic")
    c.add_argument("--seeds", type=int, default=DEFAULT_SEED_TARGET, help="heuristic seed target")
    c.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="exact-search node budget")
    c.add_argument("--heuristic-budget", type=int, default=DEFAULT_HEURISTIC_BUDGET)
    c.add_argument("--emit-witness", action="store_true", help="print the event-log certificate")
    c.add_argument("--emit-profile", action="store_true", help="print the lifted critical profile")

    n = sub.add_parser("census", help="batch computation over a name<TAB>code file")
    n.add_argument("--input", required=True)
    n.add_argument("--output", required=True)
    n.add_argument("--workers", type=int, default=1)
    n.add_argument("--strategy", choices=["auto", "exact", "heuristic"], default="auto")
    n.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    n.add_argument("--seeds", type=int, default=DEFAULT_SEED_TARGET)
    n.add_argument("--heuristic-budget", type=int, default=DEFAULT_HEURISTIC_BUDGET)
    n.add_argument("--json", action="store_true", help="also write a JSON mirror")

    v = sub.add_parser("verify", help="re-verify the certificates in a census CSV")
    v.add_argument("--input", required=True)

    o = sub.add_parser("oracle", help="exhaustive enumeration (guarded, tiny inputs)")
    o.add_argument("--gauss", required=True)
    o.add_argument("--guard", type=int, default=8, help="max crossings admitted")
    o.add_argument("--dedup", action="store_true", help="collapse repeated states")
    return parser


def _cmd_compute(args) -> int:
    try:
        code = parse_gauss(args.gauss)
        diagram = build_diagram(code)
    except (GaussCodeError, DiagramError) as exc:
        print(f"invalid gauss code: {exc}", file=sys.stderr)
        return EXIT_USAGE
    strategy = "exact" if args.exact else "heuristic" if args.heuristic else "auto"
    report = compute_width(
        diagram,
        strategy=strategy,
        node_budget=args.budget,
        seeds=args.seeds,
        heuristic_budget=args.heuristic_budget,
        gauss_text=code.serialize(),
    )
    width_tag = "exact" if report.width_exact else "upper bound"
    mu_tag = "exact" if report.mu_exact else "upper bound"
    print(f"gauss      {code.serialize() or '(unknot)'}")
    print(f"crossings  {diagram.n_crossings}")
    print(f"width      {report.width_upper}  ({width_tag})")
    print(f"mu         {report.mu_upper}  ({mu_tag})")
    print(f"seeds used {report.seeds_used}")
    print(f"nodes      {report.nodes_explored}")
    print(f"time       {report.elapsed * 1000.0:.1f} ms  [{KERNEL} kernel]")
    if args.emit_witness:
        print()
        print(report.witness.to_text(), end="")
    if args.emit_profile:
        print()
        print(profile_text(build_profile(report.witness)), end="")
    return EXIT_OK


def _cmd_census(args) -> int:
    try:
        summary = run_census(
            args.input,
            args.output,
            strategy=args.strategy,
            node_budget=args.budget,
            seeds=args.seeds,
            heuristic_budget=args.heuristic_budget,
            workers=args.workers,
            json_mirror=args.json,
        )
    except CensusError as exc:
        print(f"census failed: {exc}", file=sys.stderr)
        return EXIT_IO
    print(summary.format())
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        results = verify_certificates(args.input)
    except CensusError as exc:
        print(f"verify failed: {exc}", file=sys.stderr)
        return EXIT_IO
    failures = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        failures += 0 if ok else 1
    print(f"{len(results) - failures}/{len(results)} certificates verified")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def _cmd_oracle(args) -> int:
    try:
        diagram = build_diagram(parse_gauss(args.gauss))
    except (GaussCodeError, DiagramError) as exc:
        print(f"invalid gauss code: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = oracle_min_width(diagram, max_crossings_guard=args.guard, dedup=args.dedup)
    except TooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"min width        {result.min_width}")
    print(f"min seed count   {result.min_seed_count}")
    if result.count_of_optimal_logs is not None:
        print(f"optimal logs     {result.count_of_optimal_logs}")
    print(f"logs enumerated  {result.logs_enumerated}")
    return EXIT_OK


def _join_gauss_values(argv):
    # Gauss codes usually begin with "-"; glue them to their flag so
    # argparse does not mistake them for options.
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--gauss" and i + 1 < len(argv):
            out.append(f"--gauss={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_join_gauss_values(argv))
    handler = {
        "compute": _cmd_compute,
        "census": _cmd_census,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
