"""``declab``: build spaces from expressions, run checks, print reports.

Exit status is 0 when every check passes, 1 if any fails, 2 if a check hit
its enumeration cutoff, and 3 for a malformed space expression.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dsl import ParseError, parse_space
from .homology import homology
from .runner import CHECKS, DEFAULT_DEGREE, DEFAULT_LEVELS, DEFAULT_MAX_MAPS, exit_code, run
from .sset import ValidationError, print_sset

SCHEMA_PATH = Path(__file__).with_name("report.schema.json")
EXIT_BAD_SPACE = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(kind: str, results: list[dict]) -> str:
    return json.dumps({"kind": kind, "results": results}, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("cutoffs must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="declab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run named checks on a space")
    c.add_argument("names", nargs="+", choices=sorted(CHECKS), metavar="NAME", help=", ".join(CHECKS))
    c.add_argument("--space", default="simplex(0)", help="space expression, e.g. 'boundary(2)'")
    c.add_argument("--levels", type=_nonneg, default=DEFAULT_LEVELS)
    c.add_argument("--degree", type=_nonneg, default=DEFAULT_DEGREE)
    c.add_argument("--max-maps", type=_nonneg, default=DEFAULT_MAX_MAPS, help="enumeration cutoff per hom-set")
    c.add_argument("--json", action="store_true", help="emit a JSON report")
    c.add_argument("--out", help="write the report to a file")

    pr = sub.add_parser("print", help="print a space in the SSET v1 format")
    pr.add_argument("--space", required=True)
    pr.add_argument("--out")

    h = sub.add_parser("homology", help="integer homology of a space")
    h.add_argument("--space", required=True)
    h.add_argument("--degree", type=_nonneg, default=DEFAULT_DEGREE)
    h.add_argument("--json", action="store_true")
    h.add_argument("--out")

    s = sub.add_parser("suite", help="run a fixed suite")
    s.add_argument("suite", choices=["acceptance"])
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")
    return p


def _check(args) -> int:
    entries = [
        run(name, args.space, levels=args.levels, degree=args.degree, max_maps=args.max_maps) for name in args.names
    ]
    if args.json:
        _emit(_dump("check", [e.to_json() for e in entries]), args.out)
    else:
        lines = []
        for e in entries:
            line = f"{e.status.upper():<12} {e.check} {e.object} levels={e.levels} degree={e.degree} ({e.seconds:.2f}s)"
            if e.witness:
                line += f" witness={json.dumps(e.witness, sort_keys=True, default=str)}"
            lines.append(line)
        _emit("\n".join(lines) + "\n", args.out)
    return exit_code(e.status for e in entries)


def _homology(args) -> int:
    groups = homology(parse_space(args.space), args.degree)
    if args.json:
        _emit(_dump("homology", [g.to_json(n) for n, g in enumerate(groups)]), args.out)
    else:
        _emit("".join(f"H_{n} = {g}\n" for n, g in enumerate(groups)), args.out)
    return 0


def _suite(args) -> int:
    from .acceptance import CRITERIA, run_criterion

    outcomes = []
    for c in CRITERIA:
        o = run_criterion(c)
        outcomes.append(o)
        if not args.json:
            print(o.line(), flush=True)
    if args.json:
        _emit(_dump("acceptance", [o.to_json() for o in outcomes]), args.out)
    return exit_code(o.status for o in outcomes)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return _check(args)
        if args.command == "print":
            _emit(print_sset(parse_space(args.space)), args.out)
            return 0
        if args.command == "homology":
            return _homology(args)
        return _suite(args)
    except (ParseError, ValidationError) as exc:
        print(f"declab: bad space expression: {exc}", file=sys.stderr)
        return EXIT_BAD_SPACE


if __name__ == "__main__":
    sys.exit(main())
