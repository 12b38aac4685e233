"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 counterexample or
certificate failure.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Sequence

from . import constructive as cs
from .dot import to_dot
from .dukes import DEFAULT_MAX_M, duke_profile, oracle_classification
from .enumeration import DEFAULT_EDGE_CAP
from .errors import CertificateError, FlockError, PreconditionFailed, TheoremViolation
from .graph import RelationKind, flock_relation
from .rng import random_graph
from .textio import read_flock_file, serialize
from .verify import THEOREM_IDS, verify

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not sizes:
        raise argparse.ArgumentTypeError("at least one flock size is required")
    return sizes


def _fmt(s) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    g = read_flock_file(args.file)
    prof = duke_profile(g, args.max_m)
    print(f"sizes: {' '.join(map(str, g.sizes))}  chickens: {g.n}  arcs: {len(g.arcs())}")
    print(f"transmitters: {_fmt(prof.transmitters)}")
    for m in range(1, prof.max_m + 1):
        print(f"{m}-Dukes: {_fmt(prof.dukes_by_m[m])}  {m}-Kings: {_fmt(prof.kings_by_m[m])}")
    for i, j in itertools.combinations(range(g.num_flocks), 2):
        rel = flock_relation(g, i, j)
        if rel.kind is RelationKind.BALANCED:
            desc = "balanced"
        else:
            a, b = (i, j) if rel.kind is RelationKind.FIRST_DOMINATES_SECOND else (j, i)
            desc = f"{a} dominates {b} via {_fmt(rel.dominating_witnesses)}"
        print(f"flocks {i},{j}: {desc}")
    return EXIT_OK


def _print_classification(cl) -> None:
    print(f"constructive: {cl.kind.label} witnesses {' '.join(map(str, cl.witnesses))}")
    for cert in cl.certificates:
        chains = "; ".join("->".join(map(str, ch)) for _, ch in sorted(cert.chains.items()))
        print(f"  {cert.duke} ({cert.bound}-Duke): {chains}")
    if cl.route:
        print(f"  route: {' / '.join(cl.route)}")
    if cl.fallback:
        print("  note: fallback witness selection was used")


def cmd_classify(args) -> int:
    g = read_flock_file(args.file)
    oracle = cl = None
    if args.mode in ("oracle", "both"):
        oracle = oracle_classification(g)
        print(f"oracle: OneDuke={oracle.has_one_duke} {_fmt(oracle.one_dukes)}")
        print(f"oracle: ThreeTwoDukes={oracle.has_three_two_dukes} {_fmt(oracle.two_dukes)}")
        print(f"oracle: FourThreeDukes={oracle.has_four_three_dukes} {_fmt(oracle.three_dukes)}")
    if args.mode in ("constructive", "both"):
        cl = cs.theorem10_classify(g)
        _print_classification(cl)
        problems = cl.problems(g)
        if problems:
            for p in problems:
                print(f"certificate failure: {p}", file=sys.stderr)
            return EXIT_FAIL
    if oracle is not None and cl is not None:
        if not oracle.holds(cl.kind.value):
            print(f"disagreement: oracle does not confirm {cl.kind.label}", file=sys.stderr)
            return EXIT_FAIL
        oracle_set = {1: oracle.one_dukes, 2: oracle.two_dukes, 3: oracle.three_dukes}[cl.kind.bound]
        stray = set(cl.witnesses) - oracle_set
        if stray:
            print(f"disagreement: witnesses {_fmt(stray)} not in oracle set", file=sys.stderr)
            return EXIT_FAIL
        print("agreement: constructive outcome confirmed by oracle")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify(args.theorem, args.sizes, parallel=args.parallel, cap=args.cap)
    print(report.summary())
    for cx in report.counterexamples:
        print(f"counterexample at orientation {cx.orientation_index}: {cx.reason}")
        for line in cx.graph.splitlines():
            print(f"  {line}")
    print(f"elapsed: {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_gen(args) -> int:
    _write(serialize(random_graph(args.sizes, args.seed)), args.output)
    return EXIT_OK


def cmd_dot(args) -> int:
    g = read_flock_file(args.file)
    prof = duke_profile(g, args.max_m) if args.annotate else None
    _write(to_dot(g, prof), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="flockdukes", description="Dukes and kings in multi-flock chicken graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="print the duke profile and flock relations")
    a.add_argument("file")
    a.add_argument("--max-m", type=int, default=DEFAULT_MAX_M)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", help="1-Duke / three 2-Dukes / four 3-Dukes")
    c.add_argument("file")
    c.add_argument("--mode", choices=("oracle", "constructive", "both"), default="both")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="exhaustively check a theorem over all orientations")
    v.add_argument("theorem", type=str.upper, choices=THEOREM_IDS, metavar="THEOREM")
    v.add_argument("--sizes", type=_sizes, required=True)
    v.add_argument("--parallel", type=int, default=1)
    v.add_argument("--cap", type=int, default=DEFAULT_EDGE_CAP, help="maximum number of cross-flock pairs")
    v.set_defaults(func=cmd_verify)

    gn = sub.add_parser("gen", help="write a seeded random graph")
    gn.add_argument("--sizes", type=_sizes, required=True)
    gn.add_argument("--seed", type=int, required=True)
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)

    d = sub.add_parser("dot", help="export Graphviz DOT")
    d.add_argument("file")
    d.add_argument("-o", "--output")
    d.add_argument("--annotate", action="store_true", help="label nodes with their least duke level")
    d.add_argument("--max-m", type=int, default=DEFAULT_MAX_M)
    d.set_defaults(func=cmd_dot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (TheoremViolation, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (FlockError, OSError) as exc:
        # parse errors, precondition failures, oversize sweeps
        kind = "precondition failed" if isinstance(exc, PreconditionFailed) else "error"
        print(f"{kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
