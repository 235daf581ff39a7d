"""Command line entry point: ``lclaw {solve,family,verify,gen,bench,catalog}``.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 class violation, 4 verification
failure. Vertex ids in files and output are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from lclaw.bench import BenchConfig, format_table, run_bench
from lclaw.clawfree import SOLVERS, NotALineGraph
from lclaw.driver import detect_claw_packing, mwis_lclaw
from lclaw.family import ClassViolation, algorithm_alpha, gamma, verify_good_family
from lclaw.instances import GenConfig, ParseError, emit_dimacs, format_family, parse_family, read_instance
from lclaw.patterns import format_catalog

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CLASS, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _l_value(text: str) -> int | str:
    if text == "auto":
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer or 'auto'") from None
    if value < 1:
        raise argparse.ArgumentTypeError("l must be positive")
    return value


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(",")
    return int(lo), int(hi)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lclaw", description="Exact MWIS for l-claw-free graphs.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve MWIS and print weight + vertices")
    s.add_argument("file")
    s.add_argument("--l", type=_l_value, default="auto")
    s.add_argument("--solver", choices=SOLVERS, default="auto")
    s.add_argument("--ordering", choices=("input", "degasc", "degdesc"), default="input")
    s.add_argument("--skip-class-check", action="store_true")
    s.add_argument("--cap", type=int, default=4, help="claw packing cap for --l auto")
    s.add_argument("--json", action="store_true")

    f = sub.add_parser("family", help="dump a covering family")
    f.add_argument("file")
    grp = f.add_mutually_exclusive_group(required=True)
    grp.add_argument("--l", type=int)
    grp.add_argument("--alpha", action="store_true", help="Farber's family (2K2-free input)")
    f.add_argument("--ordering", choices=("input", "degasc", "degdesc"), default="input")

    v = sub.add_parser("verify", help="check the good-family conditions")
    v.add_argument("file")
    grp = v.add_mutually_exclusive_group(required=True)
    grp.add_argument("--l", type=int)
    grp.add_argument("--alpha", action="store_true")
    v.add_argument("--family", help="verify this family dump instead of building one")
    v.add_argument("--ordering", choices=("input", "degasc", "degdesc"), default="input")

    g = sub.add_parser("gen", help="write a random instance")
    g.add_argument("kind", choices=("lclaw", "2k2", "linegraph"))
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--n", type=int, default=12, help="vertices (root vertices for linegraph)")
    g.add_argument("--l", type=int, default=2)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--weights", type=_range, default=None, metavar="LO,HI")
    g.add_argument("-o", "--output")

    b = sub.add_parser("bench", help="family growth table")
    b.add_argument("--l", type=int, default=2)
    b.add_argument("--sizes", default="10,14,18,22")
    b.add_argument("--trials", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--density", type=float, default=0.5)
    b.add_argument("--no-timing", action="store_true", help="omit wall time (byte-stable output)")

    sub.add_parser("catalog", help="print the L1..L14 pattern atlas")
    return p


def _ids(mask_list) -> str:
    return " ".join(str(v + 1) for v in mask_list)


def cmd_solve(args) -> int:
    inst = read_instance(args.file)
    g = inst.graph
    l = args.l
    if l == "auto":
        l = detect_claw_packing(g, args.cap) + 1
    sol = mwis_lclaw(
        g, inst.weights, l, args.ordering, args.solver,
        check_class=False if args.skip_class_check else None,
    )
    if args.json:
        print(json.dumps({"l": l, "weight": sol.weight, "vertices": [v + 1 for v in sol.as_list()]}))
    else:
        print(sol.weight)
        print(_ids(sol.as_list()))
    return EXIT_OK


def _family(args, g):
    if args.alpha:
        return algorithm_alpha(g, args.ordering)
    return gamma(g, args.l, args.ordering)


def cmd_family(args) -> int:
    inst = read_instance(args.file)
    sys.stdout.write(format_family(_family(args, inst.graph)))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = read_instance(args.file)
    g = inst.graph
    if args.family:
        with open(args.family) as fh:
            members = parse_family(fh.read())
        if any(H >> g.n for H in members):
            raise ParseError("family mentions vertices outside the graph")
        report = verify_good_family(g, members, kind="alpha" if args.alpha else "gamma")
    else:
        report = verify_good_family(g, _family(args, g))
    print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_gen(args) -> int:
    inst = GenConfig(args.kind, args.seed, args.n, args.l, args.density, args.weights).build()
    text = emit_dimacs(inst)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        sizes = tuple(int(x) for x in args.sizes.split(","))
    except ValueError:
        raise UsageError("--sizes expects comma-separated integers") from None
    rows = run_bench(BenchConfig(args.l, sizes, args.trials, args.seed, args.density))
    print(format_table(rows, timing=not args.no_timing))
    return EXIT_OK if all(r.cap_ok for r in rows) else EXIT_VERIFY


def cmd_catalog(args) -> int:
    print(format_catalog())
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "family": cmd_family,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "catalog": cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ClassViolation as exc:
        claws = "; ".join(f"{c.center + 1}:{_ids(c.leaves)}" for c in exc.witness if hasattr(c, "leaves"))
        print(f"class violation: {exc}" + (f" [claws {claws}]" if claws else ""), file=sys.stderr)
        return EXIT_CLASS
    except NotALineGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
