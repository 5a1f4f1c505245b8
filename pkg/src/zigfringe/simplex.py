"""Exact-rational linear programming via two-phase tableau simplex.

Solves  min c.x  subject to  a_ub.x <= b_ub,  a_eq.x = b_eq,  x >= 0  with
fractions.Fraction arithmetic throughout.  Bland's anti-cycling rule keeps
termination unconditional; problem sizes here are tiny, so simplicity and
exactness win over sparse cleverness.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["LPResult", "solve_lp", "feasible", "OPTIMAL", "INFEASIBLE", "UNBOUNDED"]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Row = Sequence


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for i, tr in enumerate(tableau):
        if i != row and tr[col]:
            factor = tr[col]
            tableau[i] = [v - factor * p for v, p in zip(tr, tableau[row])]
    basis[row] = col


def _iterate(
    tableau: list[list[Fraction]],
    basis: list[int],
    obj: list[Fraction],
    allowed: list[bool],
) -> str:
    """Run simplex to optimality on the current objective row (minimize)."""
    while True:
        col = next(
            (j for j in range(len(obj) - 1) if allowed[j] and obj[j] < 0), None
        )
        if col is None:
            return OPTIMAL
        best_row = None
        best_ratio = None
        for i, tr in enumerate(tableau):
            if tr[col] > 0:
                ratio = tr[-1] / tr[col]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_row, best_ratio = i, ratio
        if best_row is None:
            return UNBOUNDED
        piv = tableau[best_row][col]
        factor = obj[col] / piv
        obj[:] = [v - factor * p for v, p in zip(obj, tableau[best_row])]
        obj[col] = Fraction(0)
        _pivot(tableau, basis, best_row, col)


def solve_lp(
    c: Row,
    a_ub: Sequence[Row] = (),
    b_ub: Row = (),
    a_eq: Sequence[Row] = (),
    b_eq: Row = (),
) -> LPResult:
    """Minimize c.x over x >= 0 with inequality and equality constraints."""
    n = len(c)
    raw: list[tuple[list[Fraction], Fraction, str]] = []
    for coeffs, rhs in zip(a_ub, b_ub):
        raw.append(([Fraction(v) for v in coeffs], Fraction(rhs), "ub"))
    for coeffs, rhs in zip(a_eq, b_eq):
        raw.append(([Fraction(v) for v in coeffs], Fraction(rhs), "eq"))

    n_slack = sum(1 for _, _, kind in raw if kind == "ub")
    slack_at = n
    art_cols: list[int] = []
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    pending_art: list[int] = []  # row indices needing an artificial

    for coeffs, rhs, kind in raw:
        row = coeffs + [Fraction(0)] * n_slack + [rhs]
        if kind == "ub":
            row[slack_at] = Fraction(1)
            slack_col = slack_at
            slack_at += 1
        else:
            slack_col = -1
        if row[-1] < 0:
            row = [-v for v in row]
        if kind == "ub" and row[slack_col] > 0:
            basis.append(slack_col)
        else:
            basis.append(-1)
            pending_art.append(len(rows))
        rows.append(row)

    width = n + n_slack
    for i in pending_art:
        for row in rows:
            row.insert(width, Fraction(0))
        rows[i][width] = Fraction(1)
        basis[i] = width
        art_cols.append(width)
        width += 1
    total = width + 1
    for row in rows:
        assert len(row) == total

    allowed = [True] * width + [False]
    if art_cols:
        obj = [Fraction(0)] * total
        for j in art_cols:
            obj[j] = Fraction(1)
        for i, b in enumerate(basis):
            if b in art_cols:
                obj = [v - r for v, r in zip(obj, rows[i])]
        status = _iterate(rows, basis, obj, allowed)
        assert status == OPTIMAL  # phase 1 is bounded below by 0
        if -obj[-1] > 0:
            return LPResult(INFEASIBLE)
        for j in art_cols:
            allowed[j] = False
        for i in range(len(rows)):
            if basis[i] in art_cols:
                col = next(
                    (j for j in range(width) if allowed[j] and rows[i][j] != 0),
                    None,
                )
                if col is not None:
                    _pivot(rows, basis, i, col)
        keep = [i for i in range(len(rows)) if basis[i] not in art_cols]
        rows = [rows[i] for i in keep]
        basis = [basis[i] for i in keep]

    obj = [Fraction(v) for v in c] + [Fraction(0)] * (total - n)
    for i, b in enumerate(basis):
        if obj[b]:
            factor = obj[b]
            obj = [v - factor * r for v, r in zip(obj, rows[i])]
    status = _iterate(rows, basis, obj, allowed)
    if status != OPTIMAL:
        return LPResult(status)
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = rows[i][-1]
    return LPResult(OPTIMAL, -obj[-1], tuple(x))


def feasible(
    a_ub: Sequence[Row] = (),
    b_ub: Row = (),
    a_eq: Sequence[Row] = (),
    b_eq: Row = (),
) -> bool:
    """Phase-1 feasibility of the same constraint shape."""
    n = max(
        [len(r) for r in a_ub] + [len(r) for r in a_eq] + [0],
    )
    result = solve_lp([Fraction(0)] * n, a_ub, b_ub, a_eq, b_eq)
    return result.status != INFEASIBLE
