"""Brute-force rotation-number oracle over cyclic XY-words.

An XY-word of type (q1, q2) is a cyclic word with q1 X's and q2 Y's; the
letter a moves an integer i to the least j >= i whose window i..j contains
exactly p1+1 X's, and b does the same with p2+1 Y's.  The extremal rotation
number R(w; p1/q1, p2/q2) is the maximum of the induced rotation numbers over
the finitely many XY-words of that type.  Rotation numbers are invariant
under cyclic rotation of the XY-word, so the default enumeration walks one
necklace representative per class; a validation flag forces the full linear
enumeration instead.
"""
from __future__ import annotations

import os
from fractions import Fraction
from math import comb, floor
from typing import Iterator

from . import _xykernel_py
from .errors import EnumerationCapExceeded, NoSuchLetter
from .words import letter_counts, parse_word

try:
    from . import _xykernel
except ImportError:
    _xykernel = None

__all__ = [
    "act_letter",
    "act_word",
    "rot_w",
    "max_rot",
    "rot_interval",
    "necklaces",
    "linear_words",
    "kernel_name",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 1_000_000

_FORCE_PURE = os.environ.get("ZIGFRINGE_PURE", "") == "1"
_C_LIMIT = 512


def kernel_name() -> str:
    """Which rot kernel max_rot/rot_w dispatch to by default."""
    if _xykernel is not None and not _FORCE_PURE:
        return "compiled"
    return "pure"


def _rot_pair(sym: bytes, wcodes: bytes, p1: int, p2: int) -> tuple[int, int]:
    if (
        _xykernel is not None
        and not _FORCE_PURE
        and len(sym) <= _C_LIMIT
        and len(wcodes) <= _C_LIMIT
        and p1 <= _C_LIMIT
        and p2 <= _C_LIMIT
    ):
        return _xykernel.rot_pair(sym, wcodes, p1, p2)
    return _xykernel_py.rot_pair(sym, wcodes, p1, p2)


def _check_xy(W: str) -> str:
    if not W or set(W) - {"X", "Y"}:
        raise ValueError(f"not an XY-word: {W!r}")
    return W


def _sym_bytes(W: str) -> bytes:
    return bytes(0 if ch == "X" else 1 for ch in W)


def _word_codes(w: str) -> bytes:
    return bytes(0 if ch == "a" else 1 for ch in w)


def act_letter(W: str, letter: str, p1: int, p2: int, i: int) -> int:
    """Least j >= i such that W_i..W_j holds exactly p+1 copies of the symbol.

    The letter a counts X's (p = p1), b counts Y's (p = p2).  Indices are
    1-based on the bi-infinite periodic extension of W.
    """
    _check_xy(W)
    if letter not in ("a", "b"):
        raise ValueError(f"letter must be a or b, got {letter!r}")
    target = "X" if letter == "a" else "Y"
    need = (p1 if letter == "a" else p2) + 1
    if need < 1:
        raise ValueError("letter shifts must be non-negative")
    if target not in W:
        raise NoSuchLetter(f"{W} has no {target}")
    length = len(W)
    count = 0
    j = i
    while True:
        if W[(j - 1) % length] == target:
            count += 1
            if count == need:
                return j
        j += 1


def act_word(W: str, w: str, p1: int, p2: int, i: int) -> int:
    """Apply the letters of w right to left (rightmost letter acts first)."""
    parse_word(w)
    for letter in reversed(w):
        i = act_letter(W, letter, p1, p2, i)
    return i


def rot_w(W: str, w: str, p1: int, p2: int) -> Fraction:
    """Exact rotation number of the action of w on the XY-word W."""
    _check_xy(W)
    parse_word(w)
    if p1 < 0 or p2 < 0:
        raise ValueError("letter shifts must be non-negative")
    if "a" in w and "X" not in W:
        raise NoSuchLetter(f"{W} has no X")
    if "b" in w and "Y" not in W:
        raise NoSuchLetter(f"{W} has no Y")
    num, den = _rot_pair(_sym_bytes(W), _word_codes(w), p1, p2)
    return Fraction(num, den)


def necklaces(q1: int, q2: int) -> Iterator[str]:
    """One representative per cyclic class of type-(q1, q2) XY-words.

    Prenecklace recursion pruned by the remaining budget of each symbol, so
    the tree never leaves the requested content.
    """
    if q1 < 1 or q2 < 1:
        raise ValueError("both symbol counts must be >= 1")
    length = q1 + q2
    a = bytearray(length + 1)

    def gen(t: int, p: int, r0: int, r1: int) -> Iterator[bytearray]:
        if t > length:
            if length % p == 0:
                yield a
            return
        v = a[t - p]
        if v == 0 and r0 > 0:
            a[t] = 0
            yield from gen(t + 1, p, r0 - 1, r1)
        if r1 > 0:
            a[t] = 1
            yield from gen(t + 1, p if v else t, r0, r1 - 1)

    for pre in gen(1, 1, q1, q2):
        yield "".join("Y" if v else "X" for v in pre[1:])


def linear_words(q1: int, q2: int) -> Iterator[str]:
    """Every type-(q1, q2) XY-word as a plain string, lexicographic (X < Y)."""
    buf: list[str] = []

    def rec(r1: int, r2: int) -> Iterator[str]:
        if r1 == 0 and r2 == 0:
            yield "".join(buf)
            return
        if r1:
            buf.append("X")
            yield from rec(r1 - 1, r2)
            buf.pop()
        if r2:
            buf.append("Y")
            yield from rec(r1, r2 - 1)
            buf.pop()

    yield from rec(q1, q2)


def max_rot(
    w: str,
    r: Fraction,
    s: Fraction,
    *,
    full_enumeration: bool = False,
    cap: int = DEFAULT_CAP,
) -> Fraction:
    """R(w; r, s): the largest rotation number of w over all XY-words.

    Arguments outside [0, 1) are normalized through the periodicity
    R(w; r+m, s+n) = R(w; r, s) + m*h_a + n*h_b and the offset added back.
    """
    parse_word(w)
    h_a, h_b = letter_counts(w)
    m, n = floor(r), floor(s)
    r0, s0 = r - m, s - n
    q1, p1 = r0.denominator, r0.numerator
    q2, p2 = s0.denominator, s0.numerator
    count = comb(q1 + q2, q1)
    if count > cap:
        raise EnumerationCapExceeded(f"C({q1 + q2},{q1}) = {count} > {cap}")
    wcodes = _word_codes(w)
    if full_enumeration:
        best: Fraction | None = None
        for W in linear_words(q1, q2):
            num, den = _rot_pair(_sym_bytes(W), wcodes, p1, p2)
            value = Fraction(num, den)
            if best is None or value > best:
                best = value
        assert best is not None
        return best + m * h_a + n * h_b
    if (
        _xykernel is not None
        and not _FORCE_PURE
        and q1 + q2 <= _C_LIMIT
        and len(wcodes) <= _C_LIMIT
        and p1 <= _C_LIMIT
        and p2 <= _C_LIMIT
    ):
        num, den = _xykernel.max_rot_type(q1, q2, wcodes, p1, p2)
    else:
        num, den = _xykernel_py.max_rot_type(q1, q2, wcodes, p1, p2)
    return Fraction(num, den) + m * h_a + n * h_b


def rot_interval(w: str, r: Fraction, s: Fraction, **kwargs) -> tuple[Fraction, Fraction]:
    """The compact interval of achievable rotation numbers of w at (r, s)."""
    return -max_rot(w, -r, -s, **kwargs), max_rot(w, r, s, **kwargs)
