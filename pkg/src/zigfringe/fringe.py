"""Fringe lengths of extremal-rotation plots via residue sums.

For a word with a-height h_a and b-height h_b, the fringe length above a
rational p/q depends only on q, through g = gcd(q, h_a): it equals
1/(sigma(g)*q), where sigma(g) is a per-residue maximum of block b-heights.
Both the direct residue sum and the windowed three-step variant are here,
plus the closed form available when h_a is prime.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NotADivisor, NotPrime
from .words import BlockForm, block_form, mirror, parse_word, partial_sums

__all__ = [
    "divisors",
    "lambda_sum",
    "sigma",
    "sigma_window",
    "sigma_bounds",
    "fringe_length",
    "fringe_target",
    "prime_case_fringe",
]


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    if n <= 0:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def lambda_sum(bf: BlockForm, g: int) -> int:
    """Sum over residues mod g of the largest beta among blocks landing there.

    Blocks land by their alpha partial sums A_1..A_n taken mod g; residues
    hit by no block contribute nothing.
    """
    if g <= 0 or bf.h_a % g != 0:
        raise NotADivisor(f"g={g} does not divide h_a={bf.h_a}")
    best: dict[int, int] = {}
    for a_i, b_i in zip(partial_sums(bf, 1), bf.betas):
        r = a_i % g
        if b_i > best.get(r, 0):
            best[r] = b_i
    return sum(best.values())


def sigma(bf: BlockForm, g: int) -> Fraction:
    """sigma(g) = lambda_sum(g)/g; fringe length at denominator q is 1/(sigma*q)."""
    return Fraction(lambda_sum(bf, g), g)


def sigma_window(bf: BlockForm, q: int) -> Fraction:
    """sigma at g = gcd(q, h_a) recovered from block data at denominator q.

    Three steps: extend to q' = q/g copies of the block form, take the g
    consecutive residues A_1+1 .. A_1+g mod q, and for each take the largest
    beta among blocks reaching it by a shift m*g with |m| < min(h', q').
    Agrees with sigma(bf, gcd(q, h_a)).
    """
    if q <= 0:
        raise ValueError("q must be positive")
    g = gcd(q, bf.h_a)
    q_p = q // g
    h_p = bf.h_a // g
    b_win = min(h_p, q_p)
    sums = partial_sums(bf, q_p)
    betas = bf.betas * q_p
    a_1 = sums[0]
    total = 0
    for i in range(1, g + 1):
        target = (a_1 + i) % q
        hit = 0
        for a_k, b_k in zip(sums, betas):
            for m in range(-(b_win - 1), b_win):
                if (a_k + m * g) % q == target:
                    if b_k > hit:
                        hit = b_k
                    break
        total += hit
    return Fraction(total, g)


def sigma_bounds(bf: BlockForm) -> tuple[Fraction, Fraction]:
    """(h_b/h_a, max beta): sigma(g) lies between these for every g | h_a.

    The lower bound is attained at g = h_a, the upper at g = 1.
    """
    return Fraction(bf.h_b, bf.h_a), Fraction(max(bf.betas))


def fringe_length(w: str, pq: Fraction, side: str = "left") -> Fraction:
    """Length of the constant interval beside p/q; depends only on q.

    The left fringe reads the word as given; the right fringe is the left
    fringe of the letter-swapped word.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    word = parse_word(w)
    if side == "right":
        word = mirror(word)
    bf = block_form(word)
    q = pq.denominator
    return 1 / (sigma(bf, gcd(q, bf.h_a)) * q)


def fringe_target(w: str, pq: Fraction) -> Fraction:
    """Extremal value h_a*(p/q) + h_b held constant across the fringe at p/q."""
    bf = block_form(parse_word(w))
    return Fraction(bf.h_a * pq.numerator + bf.h_b * pq.denominator, pq.denominator)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_case_fringe(w: str, pq: Fraction) -> Fraction:
    """Closed form for the left fringe when h_a is prime.

    g = gcd(q, h_a) is then 1 or h_a: the fringe is h_a/(q*h_b) when h_a
    divides q and 1/(q*max beta) otherwise.
    """
    bf = block_form(parse_word(w))
    if not _is_prime(bf.h_a):
        raise NotPrime(f"h_a={bf.h_a} is not prime")
    q = pq.denominator
    if q % bf.h_a == 0:
        return Fraction(bf.h_a, q * bf.h_b)
    return Fraction(1, q * max(bf.betas))
