"""Pure-Python orbit kernel for the XY-word action.

Symbols are bytes with 0 = X and 1 = Y; word letters are bytes with
0 = a and 1 = b.  Indices are 1-based and bi-infinite: position i carries
symbol sym[(i-1) % L], and the letter a sends i to the least j >= i such
that positions i..j contain exactly p1+1 X's (b analogously with Y's).
A word letter whose symbol is absent from the XY-word is rejected.
"""
from __future__ import annotations

from math import gcd

__all__ = ["rot_pair", "max_rot_type"]


def rot_pair(sym: bytes, wcodes: bytes, p1: int, p2: int) -> tuple[int, int]:
    """Exact rotation number of the word action on one cyclic XY-word.

    Returns (num, den) reduced, den > 0.  Iterates x -> w(x) from x = 1 and
    closes the first repeated residue mod L; the action commutes with
    translation by L, so at most L+1 iterations are needed.
    """
    length = len(sym)
    xpos = [i for i in range(length) if sym[i] == 0]
    ypos = [i for i in range(length) if sym[i] == 1]
    q1, q2 = len(xpos), len(ypos)
    if (q1 == 0 and 0 in wcodes) or (q2 == 0 and 1 in wcodes):
        raise ValueError("word acts through a symbol the XY-word lacks")
    xpre = [0] * (length + 1)
    ypre = [0] * (length + 1)
    for i in range(length):
        xpre[i + 1] = xpre[i] + (sym[i] == 0)
        ypre[i + 1] = ypre[i] + (sym[i] == 1)

    def jump(i: int, extra: int, pos: list[int], pre: list[int], cnt: int) -> int:
        # least j >= i with exactly extra+1 of the target symbol in i..j
        m, i0 = divmod(i - 1, length)
        k = m * cnt + pre[i0] + extra  # 0-based index of the landing symbol
        km, kr = divmod(k, cnt)
        return km * length + pos[kr] + 1

    steps = wcodes[::-1]  # rightmost letter acts first
    seen = {}
    values = []
    x = 1
    for step in range(length + 2):
        r = x % length
        if r in seen:
            j = seen[r]
            num = x - values[j]
            den = (step - j) * length
            g = gcd(num, den)
            return num // g, den // g
        seen[r] = step
        values.append(x)
        for code in steps:
            if code == 0:
                x = jump(x, p1, xpos, xpre, q1)
            else:
                x = jump(x, p2, ypos, ypre, q2)
    raise AssertionError("orbit failed to close within L+1 steps")


def max_rot_type(q1: int, q2: int, wcodes: bytes, p1: int, p2: int) -> tuple[int, int]:
    """Largest rotation number over all type-(q1, q2) cyclic XY-words.

    Walks one lexicographically least representative per cyclic class
    (prenecklace tree pruned by the remaining symbol budgets, so only words
    of the exact content are ever completed) and keeps the running maximum.
    Returns (num, den) reduced, den > 0.
    """
    if q1 < 1 or q2 < 1:
        raise ValueError("both symbol counts must be >= 1")
    n = q1 + q2
    a = bytearray(n + 1)
    best_num, best_den = 0, 0

    def rec(t: int, p: int, r0: int, r1: int) -> None:
        nonlocal best_num, best_den
        if t > n:
            if n % p == 0:
                num, den = rot_pair(bytes(a[1:]), wcodes, p1, p2)
                if best_den == 0 or num * best_den > best_num * den:
                    best_num, best_den = num, den
            return
        v = a[t - p]
        if v == 0 and r0 > 0:
            a[t] = 0
            rec(t + 1, p, r0 - 1, r1)
        if r1 > 0:
            a[t] = 1
            rec(t + 1, p if v else t, r0, r1 - 1)

    rec(1, 1, q1, q2)
    assert best_den > 0
    return best_num, best_den
