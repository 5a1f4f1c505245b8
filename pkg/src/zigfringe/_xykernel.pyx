# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled orbit kernel for the XY-word action.

Same contracts as _xykernel_py.rot_pair and max_rot_type; the caller guards
the input sizes so all intermediates fit in 64 bits (period and word length
at most 512, letter shifts p1, p2 at most 512).
"""

from libc.string cimport memset

__all__ = ["rot_pair", "max_rot_type", "MAX_PERIOD", "MAX_WORD", "MAX_SHIFT"]

MAX_PERIOD = 512
MAX_WORD = 512
MAX_SHIFT = 512

cdef long long _gcd(long long a, long long b):
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _rot_core(const unsigned char* sym, int length,
                   const unsigned char* wcodes, int nw,
                   long p1, long p2,
                   long long* out_num, long long* out_den):
    """Reduced rotation pair of the word action on one cyclic XY-word.

    Returns 0 on success, -1 if the orbit fails to close (cannot happen for
    valid input: the action commutes with translation by the period).
    """
    cdef int xpos[512]
    cdef int ypos[512]
    cdef int xpre[513]
    cdef int ypre[513]
    cdef int seen_step[512]
    cdef long long seen_val[512]
    cdef int q1 = 0, q2 = 0
    cdef int i

    xpre[0] = 0
    ypre[0] = 0
    for i in range(length):
        if sym[i] == 0:
            xpos[q1] = i
            q1 += 1
        else:
            ypos[q2] = i
            q2 += 1
        xpre[i + 1] = q1
        ypre[i + 1] = q2

    memset(seen_step, -1, length * sizeof(int))

    cdef long long x = 1, num, den, g, k, km, m
    cdef int step, r, j, kr, i0
    cdef unsigned char code
    for step in range(length + 2):
        r = <int>(x % length)
        if seen_step[r] >= 0:
            num = x - seen_val[r]
            den = (<long long>(step - seen_step[r])) * length
            g = _gcd(num if num >= 0 else -num, den)
            if g == 0:
                g = 1
            out_num[0] = num // g
            out_den[0] = den // g
            return 0
        seen_step[r] = step
        seen_val[r] = x
        for j in range(nw - 1, -1, -1):  # rightmost letter acts first
            code = wcodes[j]
            m = (x - 1) // length
            i0 = <int>((x - 1) % length)
            if code == 0:
                k = m * q1 + xpre[i0] + p1
                km = k // q1
                kr = <int>(k % q1)
                x = km * length + xpos[kr] + 1
            else:
                k = m * q2 + ypre[i0] + p2
                km = k // q2
                kr = <int>(k % q2)
                x = km * length + ypos[kr] + 1
    return -1


def rot_pair(const unsigned char[:] sym, const unsigned char[:] wcodes,
             long p1, long p2):
    """Exact rotation number (num, den) of the word action on one XY-word."""
    cdef int length = sym.shape[0]
    cdef int nw = wcodes.shape[0]
    if length > 512 or nw > 512 or p1 > 512 or p2 > 512 or p1 < 0 or p2 < 0:
        raise ValueError("kernel limits exceeded")
    cdef int q1 = 0, q2 = 0
    cdef int i
    for i in range(length):
        if sym[i] == 0:
            q1 += 1
        else:
            q2 += 1
    for i in range(nw):
        if (q1 == 0 and wcodes[i] == 0) or (q2 == 0 and wcodes[i] != 0):
            raise ValueError("word acts through a symbol the XY-word lacks")
    cdef long long num = 0, den = 0
    if _rot_core(&sym[0], length, &wcodes[0], nw, p1, p2, &num, &den) != 0:
        raise AssertionError("orbit failed to close within L+1 steps")
    return (num, den)


cdef void _fkm_max(unsigned char* a, int n, int t, int p, int r0, int r1,
                   const unsigned char* wcodes, int nw, long p1, long p2,
                   long long* best):
    # prenecklace tree pruned by remaining symbol budgets; best = {num, den},
    # den == 0 while unset
    cdef unsigned char v
    cdef long long num, den
    if t > n:
        if n % p == 0:
            if _rot_core(a + 1, n, wcodes, nw, p1, p2, &num, &den) == 0:
                if best[1] == 0 or num * best[1] > best[0] * den:
                    best[0] = num
                    best[1] = den
        return
    v = a[t - p]
    if v == 0 and r0 > 0:
        a[t] = 0
        _fkm_max(a, n, t + 1, p, r0 - 1, r1, wcodes, nw, p1, p2, best)
    if r1 > 0:
        a[t] = 1
        _fkm_max(a, n, t + 1, p if v else t, r0, r1 - 1, wcodes, nw, p1, p2, best)


def max_rot_type(int q1, int q2, const unsigned char[:] wcodes, long p1, long p2):
    """Largest reduced rotation pair over all type-(q1, q2) XY-words."""
    cdef int n = q1 + q2
    cdef int nw = wcodes.shape[0]
    if q1 < 1 or q2 < 1:
        raise ValueError("both symbol counts must be >= 1")
    if n > 512 or nw > 512 or p1 > 512 or p2 > 512 or p1 < 0 or p2 < 0:
        raise ValueError("kernel limits exceeded")
    cdef unsigned char a[513]
    memset(a, 0, sizeof(a))
    cdef long long best[2]
    best[0] = 0
    best[1] = 0
    _fkm_max(a, n, 1, 1, q1, q2, &wcodes[0], nw, p1, p2, best)
    if best[1] == 0:
        raise AssertionError("no necklace of the requested type")
    return (best[0], best[1])
