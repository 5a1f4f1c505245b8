"""Command line front end.

Exit codes: 0 on success, 1 when a computation rejects its input (the error
class name goes to stderr), 2 on usage errors.  Single rational results print
as "num/den"; plot subcommands write CSV/SVG/PGM to stdout or --output.
"""
from __future__ import annotations

import argparse
import sys

from .errors import DomainError, IoFailure
from .fringe import fringe_length, sigma
from .plots import (
    default_jobs,
    fringe_series,
    grid_csv,
    grid_pgm,
    grid_svg,
    series_csv,
    series_svg,
    ziggurat_grid,
)
from .rationals import format_rational, parse_rational
from .reference import table_text
from .selfsim import abaab_pieces, prime_pieces, verify_piece
from .stairstep import DEFAULT_PARTITION_CAP, stairstep_min_t
from .words import block_form, cyclically_equal, parse_word
from .xy import DEFAULT_CAP, max_rot

__all__ = ["build_parser", "run", "main"]


def _word_arg(text: str):
    try:
        return parse_word(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from None


def _cmd_rot_max(args) -> int:
    value = max_rot(
        args.word, args.r, args.s, full_enumeration=args.full_enumeration, cap=args.cap
    )
    print(format_rational(value))
    return 0


def _cmd_stairstep(args) -> int:
    value = stairstep_min_t(
        args.word,
        args.base,
        args.target,
        fringe_caps=args.fringe_caps,
        partition_cap=args.partition_cap,
    )
    print(format_rational(value))
    return 0


def _cmd_fringe(args) -> int:
    print(format_rational(fringe_length(args.word, args.x, args.side)))
    return 0


def _cmd_sigma(args) -> int:
    print(format_rational(sigma(block_form(args.word), args.g)))
    return 0


def _cmd_table1(args) -> int:
    sys.stdout.write(table_text())
    return 0


def _cmd_fringe_plot(args) -> int:
    series = fringe_series(args.word, args.max_q, args.side, args.jobs)
    text = series_csv(series) if args.format == "csv" else series_svg(series)
    _write(text, args.output)
    return 0


def _cmd_ziggurat(args) -> int:
    grid = ziggurat_grid(args.word, args.max_denom, args.jobs)
    emit = {"csv": grid_csv, "pgm": grid_pgm, "svg": grid_svg}[args.format]
    _write(emit(grid), args.output)
    return 0


def _cmd_selfsim_check(args) -> int:
    if cyclically_equal(args.word, "abaab"):
        pieces = abaab_pieces()
    else:
        pieces = prime_pieces(block_form(args.word).h_a)
    failed = 0
    for piece in pieces:
        report = verify_piece(args.word, piece, args.max_q)
        if report.ok:
            print(f"{piece.name}: ok ({report.points} points)")
        else:
            failed += 1
            f = report.failure
            detail = f"{f.reason} at x={f.x}"
            if f.claimed is not None:
                detail += f" (claimed {f.claimed}, actual {f.actual})"
            print(f"{piece.name}: FAIL {detail}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zigfringe",
        description="Extremal rotation numbers and fringe lengths of positive words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rot-max", help="largest rotation number R(w; r, s)")
    p.add_argument("word", type=_word_arg)
    p.add_argument("r", type=_rational_arg)
    p.add_argument("s", type=_rational_arg)
    p.add_argument(
        "--full-enumeration",
        action="store_true",
        help="scan all XY-words instead of one per cyclic class",
    )
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N")
    p.set_defaults(func=_cmd_rot_max)

    p = sub.add_parser("stairstep", help="least t with R(word; base, t) >= target")
    p.add_argument("word", type=_word_arg)
    p.add_argument("base", type=_rational_arg, help="rational p/q")
    p.add_argument("target", type=_rational_arg, help="rational c/d")
    p.add_argument(
        "--fringe-caps",
        action="store_true",
        help="restrict partitions to parts l_i <= q*beta_i - 1 (fringe targets)",
    )
    p.add_argument(
        "--partition-cap", type=int, default=DEFAULT_PARTITION_CAP, metavar="N"
    )
    p.set_defaults(func=_cmd_stairstep)

    p = sub.add_parser("fringe", help="fringe length beside a rational")
    p.add_argument("word", type=_word_arg)
    p.add_argument("x", type=_rational_arg, help="rational p/q")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(func=_cmd_fringe)

    p = sub.add_parser("sigma", help="sigma(g) = lambda_sum(g)/g")
    p.add_argument("word", type=_word_arg)
    p.add_argument("g", type=int)
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("table1", help="recorded sigma table with cross-check")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("fringe-plot", help="fringe lengths over a Farey axis")
    p.add_argument("word", type=_word_arg)
    p.add_argument("--max-q", type=int, default=100, metavar="N")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--jobs", type=int, default=None, metavar="N")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_fringe_plot)

    p = sub.add_parser("ziggurat", help="R(word; r, s) over a Farey grid")
    p.add_argument("word", type=_word_arg)
    p.add_argument("--max-denom", type=int, default=6, metavar="N")
    p.add_argument("--format", choices=("csv", "pgm", "svg"), default="csv")
    p.add_argument("--jobs", type=int, default=None, metavar="N")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=_cmd_ziggurat)

    p = sub.add_parser("selfsim-check", help="verify self-similarity pieces")
    p.add_argument("word", type=_word_arg)
    p.add_argument("--max-q", type=int, default=50, metavar="N")
    p.set_defaults(func=_cmd_selfsim_check)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    jobs = getattr(args, "jobs", None)
    if jobs is not None and jobs < 1:
        print("jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
