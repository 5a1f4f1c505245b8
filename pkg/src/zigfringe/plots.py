"""Plot data for fringe-length and extremal-rotation graphs, plus emitters.

Series and grids are computed over the reduced rationals of bounded
denominator in [0, 1] and rendered to CSV, SVG 1.1, or plain PGM (P2).  All
numeric output is derived from exact rationals with integer arithmetic, so a
given input yields byte-identical output regardless of worker count.
"""
from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .fringe import fringe_length
from .rationals import farey
from .words import parse_word
from .xy import max_rot

__all__ = [
    "FringeSeries",
    "ZigguratGrid",
    "default_jobs",
    "fringe_series",
    "ziggurat_grid",
    "series_csv",
    "series_svg",
    "grid_csv",
    "grid_pgm",
    "grid_svg",
]


def default_jobs() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return max(1, os.cpu_count() or 1)


def _axis(max_q: int) -> list[Fraction]:
    return farey(max_q) + [Fraction(1)]


def _fringe_point(item: tuple[str, str, Fraction]) -> Fraction:
    w, side, x = item
    return fringe_length(w, x, side)


def _grid_point(item: tuple[str, Fraction, Fraction]) -> Fraction:
    w, r, s = item
    return max_rot(w, r, s)


def _pmap(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    chunk = max(1, len(items) // (4 * jobs))
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=chunk)


@dataclass(frozen=True)
class FringeSeries:
    word: str
    side: str
    points: tuple[tuple[Fraction, Fraction], ...]  # (x, fringe length)


@dataclass(frozen=True)
class ZigguratGrid:
    word: str
    rs: tuple[Fraction, ...]
    ss: tuple[Fraction, ...]
    values: tuple[tuple[Fraction, ...], ...]  # values[i][j] = R(word; rs[i], ss[j])


def fringe_series(
    w: str, max_q: int, side: str = "left", jobs: int | None = None
) -> FringeSeries:
    """Fringe length at every reduced rational in [0, 1] with q <= max_q."""
    parse_word(w)
    xs = _axis(max_q)
    n_jobs = default_jobs() if jobs is None else jobs
    frs = _pmap(_fringe_point, [(w, side, x) for x in xs], n_jobs)
    return FringeSeries(w, side, tuple(zip(xs, frs)))


def ziggurat_grid(w: str, max_denom: int, jobs: int | None = None) -> ZigguratGrid:
    """R(w; r, s) on the grid of reduced rationals with denominator <= max_denom."""
    parse_word(w)
    axis = _axis(max_denom)
    n_jobs = default_jobs() if jobs is None else jobs
    flat = _pmap(_grid_point, [(w, r, s) for r in axis for s in axis], n_jobs)
    k = len(axis)
    rows = tuple(tuple(flat[i * k : (i + 1) * k]) for i in range(k))
    return ZigguratGrid(w, tuple(axis), tuple(axis), rows)


def series_csv(series: FringeSeries) -> str:
    lines = ["p,q,fr_num,fr_den"]
    for x, fr in series.points:
        lines.append(
            f"{x.numerator},{x.denominator},{fr.numerator},{fr.denominator}"
        )
    return "\n".join(lines) + "\n"


def grid_csv(grid: ZigguratGrid) -> str:
    lines = ["r_num,r_den,s_num,s_den,R_num,R_den"]
    for i, r in enumerate(grid.rs):
        for j, s in enumerate(grid.ss):
            v = grid.values[i][j]
            lines.append(
                f"{r.numerator},{r.denominator},{s.numerator},{s.denominator},"
                f"{v.numerator},{v.denominator}"
            )
    return "\n".join(lines) + "\n"


def _dec(x: Fraction, places: int = 6) -> str:
    """Exact decimal rendering, round half up, trailing zeros stripped."""
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    scaled, rem = divmod(num * 10**places, den)
    if 2 * rem >= den:
        scaled += 1
    whole, part = divmod(scaled, 10**places)
    text = f"{whole}.{part:0{places}d}".rstrip("0").rstrip(".")
    return "0" if text == "0" else sign + text


_SVG_W, _SVG_H, _SVG_M = 800, 400, 20


def series_svg(series: FringeSeries) -> str:
    """Impulse plot: one vertical line per rational, height = fringe length."""
    pw = _SVG_W - 2 * _SVG_M
    ph = _SVG_H - 2 * _SVG_M
    base = _SVG_H - _SVG_M
    top = max((fr for _, fr in series.points), default=Fraction(1)) or Fraction(1)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f"<title>{series.side} fringe lengths of {series.word}</title>",
        f'<line x1="{_SVG_M}" y1="{base}" x2="{_SVG_W - _SVG_M}" y2="{base}" '
        f'stroke="#888" stroke-width="1"/>',
    ]
    for x, fr in series.points:
        px = _dec(_SVG_M + x * pw)
        py = _dec(base - fr / top * ph)
        lines.append(
            f'<line x1="{px}" y1="{base}" x2="{px}" y2="{py}" '
            f'stroke="#20609f" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _gray_levels(grid: ZigguratGrid) -> list[list[int]]:
    """Rows top to bottom (s decreasing), columns left to right (r increasing).

    Levels rescale [min, max] onto 0..255, rounding half up; a constant grid
    comes out all zero.
    """
    flat = [v for row in grid.values for v in row]
    lo, hi = min(flat), max(flat)
    span = hi - lo
    out = []
    for j in reversed(range(len(grid.ss))):
        row = []
        for i in range(len(grid.rs)):
            if span == 0:
                row.append(0)
            else:
                row.append(floor((grid.values[i][j] - lo) * 255 / span + Fraction(1, 2)))
        out.append(row)
    return out


def grid_pgm(grid: ZigguratGrid) -> str:
    levels = _gray_levels(grid)
    lines = ["P2", f"{len(grid.rs)} {len(grid.ss)}", "255"]
    lines.extend(" ".join(str(v) for v in row) for row in levels)
    return "\n".join(lines) + "\n"


def grid_svg(grid: ZigguratGrid, cell: int = 8) -> str:
    levels = _gray_levels(grid)
    width = cell * len(grid.rs)
    height = cell * len(grid.ss)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>extremal rotation numbers of {grid.word}</title>",
    ]
    for row_idx, row in enumerate(levels):
        for col_idx, v in enumerate(row):
            lines.append(
                f'<rect x="{col_idx * cell}" y="{row_idx * cell}" '
                f'width="{cell}" height="{cell}" fill="rgb({v},{v},{v})"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
