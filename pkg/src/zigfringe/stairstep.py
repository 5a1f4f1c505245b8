"""Stairstep computation of the least t with R(w; p/q, t) >= c/d.

Write w^d as b^{beta_k} a^{alpha_k} ... b^{beta_1} a^{alpha_1} with k = n*d.
Every way the target can be met corresponds to a partition l_1..l_k of the
residual c*q - sum(alpha_i*p + 1) into non-negative parts; each partition
yields a small linear program over the simplex t_1..t_q (displacement shares
per residue class), and the answer is the minimum of the LP optima over all
partitions.  With caps l_i <= q*beta_i - 1 enabled the enumeration collapses
to the fringe case's unique partition; with caps off an exact branch-and-bound
still scans the full partition space.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterator, Sequence

from .errors import EnumerationCapExceeded, NoFeasiblePartition
from .simplex import OPTIMAL, solve_lp
from .words import BlockForm, block_form, parse_word

__all__ = [
    "StairstepProblem",
    "make_problem",
    "residual",
    "partitions",
    "ConstraintSet",
    "constraints",
    "LPSolution",
    "solve_min_u",
    "stairstep_min_t",
    "DEFAULT_PARTITION_CAP",
]

DEFAULT_PARTITION_CAP = 100_000


@dataclass(frozen=True)
class StairstepProblem:
    """One instance: block form, base point p/q, target c/d, k = n*d blocks."""

    bf: BlockForm
    p: int
    q: int
    c: int
    d: int

    @property
    def k(self) -> int:
        return self.bf.n * self.d

    @property
    def alphas(self) -> tuple[int, ...]:
        return self.bf.alphas * self.d

    @property
    def betas(self) -> tuple[int, ...]:
        return self.bf.betas * self.d


def make_problem(w: str, pq: Fraction, cd: Fraction) -> StairstepProblem:
    if pq < 0:
        raise ValueError("base point p/q must be non-negative")
    return StairstepProblem(
        block_form(parse_word(w)),
        pq.numerator,
        pq.denominator,
        cd.numerator,
        cd.denominator,
    )


def residual(problem: StairstepProblem) -> int:
    """c*q - sum over all k blocks of (alpha_i*p + 1); may be negative."""
    return problem.c * problem.q - sum(
        a * problem.p + 1 for a in problem.alphas
    )


def partitions(
    total: int, k: int, caps: Sequence[int] | None = None
) -> Iterator[tuple[int, ...]]:
    """All k-part non-negative compositions of total, lexicographic.

    Respects per-index caps when given.  Raises NoFeasiblePartition when no
    composition exists at all (negative total, or caps sum below total).
    """
    if total < 0 or (caps is not None and sum(caps) < total):
        raise NoFeasiblePartition(f"total={total}, k={k}, caps={caps}")
    parts = [0] * k

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == k - 1:
            if caps is None or remaining <= caps[i]:
                parts[i] = remaining
                yield tuple(parts)
            return
        tail = remaining if caps is None else sum(caps[i + 1 :])
        hi = remaining if caps is None else min(caps[i], remaining)
        lo = max(0, remaining - tail)
        for v in range(lo, hi + 1):
            parts[i] = v
            yield from rec(i + 1, remaining - v)

    yield from rec(0, total)


@dataclass(frozen=True)
class ConstraintSet:
    """Window data per block: (s_i mod q, l_i, beta_i).

    The residue s_i stands for the t-index s_i with indices taken mod q
    (so residue 0 means t_q); the window of constraint i covers the l_i mod q
    indices s_i+1 .. s_i + (l_i mod q), and every index additionally carries
    the full-wrap count floor(l_i/q).
    """

    q: int
    windows: tuple[tuple[int, int, int], ...]


def constraints(problem: StairstepProblem, partition: Sequence[int]) -> ConstraintSet:
    """Window constraints for one partition; s_i from the running formula."""
    if len(partition) != problem.k or sum(partition) != residual(problem):
        raise ValueError("partition does not match the problem residual")
    windows = []
    acc = 0
    for i, (alpha, beta) in enumerate(zip(problem.alphas, problem.betas)):
        acc += alpha * problem.p + 1
        s_i = (acc + sum(partition[:i])) % problem.q
        windows.append((s_i, partition[i], beta))
    return ConstraintSet(problem.q, tuple(windows))


def _coefficient_rows(cs: ConstraintSet) -> list[tuple[list[int], int]]:
    """(coefficients over t_1..t_q, beta) per window constraint."""
    rows = []
    for s_i, l_i, beta in cs.windows:
        base, part = divmod(l_i, cs.q)
        coeffs = [base] * cs.q
        for mm in range(1, part + 1):
            coeffs[(s_i + mm - 1) % cs.q] += 1
        rows.append((coeffs, beta))
    return rows


@dataclass(frozen=True)
class LPSolution:
    u: Fraction
    t: tuple[Fraction, ...]


def solve_min_u(q: int, cs: ConstraintSet) -> LPSolution:
    """Least u admitting t on the simplex with every window sum <= u*beta_i."""
    rows = _coefficient_rows(cs)
    a_ub = [coeffs + [-beta] for coeffs, beta in rows]
    b_ub = [0] * len(rows)
    a_eq = [[1] * q + [0]]
    b_eq = [1]
    objective = [0] * q + [1]
    result = solve_lp(objective, a_ub, b_ub, a_eq, b_eq)
    assert result.status == OPTIMAL  # simplex point + large u is always feasible
    assert result.x is not None and result.value is not None
    return LPSolution(result.value, result.x[:q])


def _row_bound(l_i: int, beta: int, q: int) -> Fraction:
    # any t on the simplex gives window sum >= floor(l_i/q)
    return Fraction(l_i // q, beta)


def _min_u_branch_and_bound(
    problem: StairstepProblem, total: int, cap: int
) -> tuple[Fraction, tuple[int, ...], tuple[Fraction, ...]]:
    """Exact min over all partitions via depth-first search with pruning.

    The value order tries the capped value min(remaining, q*beta_i - 1) first,
    which lands on the fringe partition immediately and makes the incumbent
    sharp; branches are cut by the per-row lower bound floor(l/q)/beta and by
    suffix capacity against the incumbent.
    """
    q, k = problem.q, problem.k
    betas = problem.betas
    best_u: Fraction | None = None
    best: tuple[tuple[int, ...], tuple[Fraction, ...]] | None = None
    solved = 0
    parts = [0] * k

    def suffix_room(i: int, u_limit: Fraction) -> int:
        # largest suffix sum still allowing every row bound to stay below u_limit
        room = 0
        for j in range(i, k):
            room += q * ceil(u_limit * betas[j]) - 1
        return room

    def leaf() -> None:
        nonlocal best_u, best, solved
        solved += 1
        if solved > cap:
            raise EnumerationCapExceeded(
                f"more than {cap} partitions solved; raise the cap"
            )
        sol = solve_min_u(q, constraints(problem, parts))
        if best_u is None or sol.u < best_u:
            best_u = sol.u
            best = (tuple(parts), sol.t)

    def descend(i: int, remaining: int, bound: Fraction) -> None:
        if best_u is not None and bound >= best_u:
            return
        if i == k - 1:
            parts[i] = remaining
            if best_u is None or max(bound, _row_bound(remaining, betas[i], q)) < best_u:
                leaf()
            return
        if best_u is not None and remaining > suffix_room(i, best_u):
            return
        preferred = min(remaining, q * betas[i] - 1)
        for v in range(preferred, -1, -1):
            parts[i] = v
            descend(i + 1, remaining - v, max(bound, _row_bound(v, betas[i], q)))
        for v in range(preferred + 1, remaining + 1):
            new_bound = max(bound, _row_bound(v, betas[i], q))
            if best_u is not None and new_bound >= best_u:
                break  # the row bound only grows with v
            parts[i] = v
            descend(i + 1, remaining - v, new_bound)

    descend(0, total, Fraction(0))
    assert best_u is not None and best is not None
    return best_u, best[0], best[1]


def stairstep_min_t(
    w: str,
    pq: Fraction,
    cd: Fraction,
    *,
    fringe_caps: bool = False,
    partition_cap: int = DEFAULT_PARTITION_CAP,
) -> Fraction:
    """Minimum over all partitions of the LP optimum: inf{t : R(w;p/q,t) >= c/d}.

    fringe_caps=True restricts parts to l_i <= q*beta_i - 1, valid whenever the
    optimum is known to satisfy u < 1 (fringe targets); the default scans the
    whole partition space exactly.
    """
    problem = make_problem(w, pq, cd)
    total = residual(problem)
    if total < 0:
        raise NoFeasiblePartition(f"residual {total} < 0")
    q = problem.q
    if fringe_caps:
        caps = [q * b - 1 for b in problem.betas]
        best: Fraction | None = None
        count = 0
        for part in partitions(total, problem.k, caps):
            count += 1
            if count > partition_cap:
                raise EnumerationCapExceeded(
                    f"more than {partition_cap} partitions; raise the cap"
                )
            sol = solve_min_u(q, constraints(problem, part))
            if best is None or sol.u < best:
                best = sol.u
        assert best is not None
        return best
    u, _, _ = _min_u_branch_and_bound(problem, total, partition_cap)
    return u
