"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial
from pathlib import Path
from typing import Iterable, Sequence

from duflo.core_words import DomainError, format_word, parse_word
from duflo.duflo_engine import duflo_descendants, duflo_leq, induced_order, offsprings, project_word
from duflo.rs_cells import cell, cell_size, rs_pair
from duflo.tableaux import (
    Tableau,
    diagram_descendants,
    format_partition,
    format_tableau,
    is_standard_tableau,
    parse_partition,
    parse_tableau,
    project,
    standard_tableaux,
)
from duflo.verification import run_suite

DEFAULT_MAX_N = 8

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _standard(text: str) -> Tableau:
    t = parse_tableau(text)
    if not is_standard_tableau(t):
        raise DomainError(f"tableau {text!r} is not standard (entries must be 1..n)")
    return t


def _emit(args: argparse.Namespace, text_lines: Iterable[str], payload: dict) -> str:
    if args.format == "json":
        return json.dumps({"schema": 1, **payload}, sort_keys=True) + "\n"
    return "".join(line + "\n" for line in text_lines)


def _tableau_set(args: argparse.Namespace, key: str, tableaux: Iterable[Tableau]) -> str:
    ordered = sorted(format_tableau(t) for t in tableaux)
    return _emit(args, ordered, {key: ordered})


def _check_n(args: argparse.Namespace, n: int) -> None:
    if not 1 <= n <= args.max_n:
        raise UsageError(f"--n must lie in 1..{args.max_n}, got {n}")


def cmd_rs(args: argparse.Namespace) -> str:
    pair = rs_pair(parse_word(args.word))
    t, q = format_tableau(pair.insertion), format_tableau(pair.recording)
    return _emit(args, [f"T: {t}", f"Q: {q}"], {"T": t, "Q": q})


def cmd_cell(args: argparse.Namespace) -> str:
    words = sorted(format_word(w) for w in cell(_standard(args.tableau)).members)
    return _emit(args, words, {"cell": words})


def cmd_cellsize(args: argparse.Namespace) -> str:
    k = cell_size(_standard(args.tableau))
    return _emit(args, [str(k)], {"size": k})


def cmd_offsprings(args: argparse.Namespace) -> str:
    t = _standard(args.tableau)
    _check_n(args, len(sum(t, ())))
    return _tableau_set(args, "offsprings", offsprings(t))


def cmd_descendants(args: argparse.Namespace) -> str:
    t = _standard(args.tableau)
    _check_n(args, len(sum(t, ())))
    return _tableau_set(args, "descendants", duflo_descendants(t))


def cmd_order(args: argparse.Namespace) -> str:
    t, s = _standard(args.lower), _standard(args.upper)
    _check_n(args, len(sum(t, ())))
    answer = duflo_leq(t, s)
    return _emit(args, ["true" if answer else "false"], {"leq": answer})


def cmd_poset(args: argparse.Namespace) -> str:
    _check_n(args, args.n)
    poset = induced_order(args.n)
    if args.format == "json":
        return json.dumps(poset.to_json(with_reach=args.reach), sort_keys=True) + "\n"
    return poset.to_dot()


def cmd_diagram_descendants(args: argparse.Namespace) -> str:
    found = sorted(format_partition(lam) for lam in diagram_descendants(parse_partition(args.partition)))
    return _emit(args, found, {"descendants": found})


def cmd_project(args: argparse.Namespace) -> str:
    i, j = args.range
    operand = args.operand.strip()
    if operand.startswith("["):
        w = parse_word(operand)
        if not 1 <= i <= j <= len(w):
            raise DomainError(f"range {i} {j} out of bounds for {operand}")
        out = format_word(project_word(w, i, j))
    else:
        out = format_tableau(project(parse_tableau(operand), i, j))
    return _emit(args, [out], {"projection": out})


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    if not 1 <= args.n <= 7:
        raise UsageError(f"verify supports --n in 1..7, got {args.n}")
    results = list(run_suite(args.n, args.suite))
    counts = {"words": factorial(args.n), "tableaux": len(standard_tableaux(args.n))}
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        body = json.dumps(
            {"schema": 1, "n": args.n, "suite": args.suite, **counts,
             "checks": [{"name": r.name, "passed": r.passed} for r in results]},
            sort_keys=True,
        ) + "\n"
    else:
        lines = [f"n={args.n} suite={args.suite} words={counts['words']} tableaux={counts['tableaux']}"]
        lines += [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" for r in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        body = "\n".join(lines) + "\n"
    return body, EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", type=Path, help="write output to this file instead of stdout")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="size ceiling (default 8)")

    parser = argparse.ArgumentParser(prog="duflo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rs", parents=[common], help="insertion and recording tableaux of a word")
    p.add_argument("word")
    p.set_defaults(run=cmd_rs)

    p = sub.add_parser("cell", parents=[common], help="all words with the given insertion tableau")
    p.add_argument("tableau")
    p.set_defaults(run=cmd_cell)

    p = sub.add_parser("cellsize", parents=[common], help="size of a cell")
    p.add_argument("tableau")
    p.set_defaults(run=cmd_cellsize)

    p = sub.add_parser("offsprings", parents=[common], help="offspring set of a tableau")
    p.add_argument("tableau")
    p.set_defaults(run=cmd_offsprings)

    p = sub.add_parser("descendants", parents=[common], help="covers of a tableau in the induced order")
    p.add_argument("tableau")
    p.set_defaults(run=cmd_descendants)

    p = sub.add_parser("order", parents=[common], help="is the first tableau below the second")
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(run=cmd_order)

    p = sub.add_parser("poset", parents=[common], help="export the induced order (text = DOT)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reach", action="store_true", help="include the full relation in JSON output")
    p.set_defaults(run=cmd_poset)

    p = sub.add_parser("diagram-descendants", parents=[common], help="dominance covers of a partition")
    p.add_argument("partition")
    p.set_defaults(run=cmd_diagram_descendants)

    p = sub.add_parser("project", parents=[common], help="restrict a tableau or word to an interval of values")
    p.add_argument("operand")
    p.add_argument("--range", type=int, nargs=2, metavar=("I", "J"), required=True)
    p.set_defaults(run=cmd_project)

    p = sub.add_parser("verify", parents=[common], help="run the exhaustive check suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", choices=["fast", "full"], default="fast")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    body, status = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out is not None:
        args.out.write_text(body, encoding="utf-8")
    else:
        sys.stdout.write(body)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
