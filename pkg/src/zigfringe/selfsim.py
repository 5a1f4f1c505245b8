"""Projective self-similarity of fringe-length plots.

A similarity piece carries a rational map (x, y) -> ((a11*x + a12)/(c*x + d0),
kappa*y/(c*x + d0)) sending one x-interval of the fringe plot onto another
while matching fringe lengths exactly.  verify_piece checks a piece pointwise
over every reduced rational in its source interval up to a denominator bound,
including the integer-level invariants (coprimality of the unreduced image,
preservation of gcd(q, h_a)) that make the fringe identity possible at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotPrime, PoleHit
from .fringe import _is_prime, fringe_length
from .words import block_form, parse_word

__all__ = [
    "ProjectiveMap",
    "SimilarityPiece",
    "reflect_piece",
    "abaab_pieces",
    "prime_pieces",
    "PointFailure",
    "VerificationReport",
    "verify_piece",
]


@dataclass(frozen=True)
class ProjectiveMap:
    """x' = (a11*x + a12)/(c*x + d0), y' = kappa*y/(c*x + d0)."""

    a11: int
    a12: int
    c: int
    d0: int
    kappa: int = 1

    def __post_init__(self) -> None:
        if self.a11 * self.d0 - self.a12 * self.c == 0:
            raise ValueError("projective map must have nonzero determinant")
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")

    def raw_image(self, x: Fraction) -> tuple[int, int]:
        """Unreduced integer (numerator, denominator) of the image of x."""
        p, q = x.numerator, x.denominator
        return self.a11 * p + self.a12 * q, self.c * p + self.d0 * q

    def apply(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        num, den = self.raw_image(x)
        if den == 0:
            raise PoleHit(f"x = {x} is the pole of {self}")
        return Fraction(num, den), Fraction(self.kappa) * y * x.denominator / den


@dataclass(frozen=True)
class SimilarityPiece:
    """A map claimed to carry the fringe plot over source onto target."""

    name: str
    source: tuple[Fraction, Fraction]
    target: tuple[Fraction, Fraction]
    map: ProjectiveMap

    def __post_init__(self) -> None:
        if not self.source[0] < self.source[1]:
            raise ValueError("empty source interval")
        if not self.target[0] < self.target[1]:
            raise ValueError("empty target interval")


def reflect_piece(piece: SimilarityPiece, name: str | None = None) -> SimilarityPiece:
    """Conjugate a piece by x -> 1-x on both source and target.

    Fringe lengths depend on x only through its denominator, so the plot is
    symmetric about x = 1/2 and reflected pieces hold whenever the originals do.
    """
    m = piece.map
    reflected = ProjectiveMap(
        m.a11 - m.c,
        m.c + m.d0 - m.a11 - m.a12,
        -m.c,
        m.c + m.d0,
        m.kappa,
    )
    lo, hi = piece.source
    t_lo, t_hi = piece.target
    return SimilarityPiece(
        name if name is not None else piece.name + "-reflected",
        (1 - hi, 1 - lo),
        (1 - t_hi, 1 - t_lo),
        reflected,
    )


def abaab_pieces() -> tuple[SimilarityPiece, ...]:
    """Six pieces tiling (0, 1/2) and (1/2, 1) for the word abaab."""
    f = Fraction
    left = (
        SimilarityPiece(
            "left-outer", (f(0), f(1, 4)), (f(0), f(1)), ProjectiveMap(1, 0, -3, 1)
        ),
        SimilarityPiece(
            "left-middle", (f(1, 4), f(1, 3)), (f(0), f(1, 3)), ProjectiveMap(4, -1, 9, -2)
        ),
        SimilarityPiece(
            "left-inner", (f(1, 3), f(1, 2)), (f(0), f(1, 3)), ProjectiveMap(-2, 1, -3, 2)
        ),
    )
    right = tuple(
        reflect_piece(piece, name)
        for piece, name in zip(left, ("right-outer", "right-middle", "right-inner"))
    )
    return left + right


def prime_pieces(h: int) -> tuple[SimilarityPiece, ...]:
    """Pieces valid for every word whose a-count is the prime h.

    The outer and middle pieces hold for all primes.  The half-interval piece
    holds only for odd h: its map has no integer unimodular form when h = 2,
    and the fringe identity genuinely fails there (ababb at x = 1/3 maps to
    2/5 with predicted fringe 1/5 against an actual 1/10).
    """
    if not _is_prime(h):
        raise NotPrime(f"h={h} is not prime")
    f = Fraction
    pieces = [
        SimilarityPiece(
            "outer", (f(0), f(1, h + 1)), (f(0), f(1)), ProjectiveMap(1, 0, -h, 1)
        ),
        SimilarityPiece(
            "middle",
            (f(1, h + 1), f(1, h)),
            (f(0), f(1, h)),
            ProjectiveMap(h + 1, -1, h * h, -(h - 1)),
        ),
    ]
    if h % 2 == 1:
        pieces.append(
            SimilarityPiece(
                "half-interval",
                (f(h - 1, 2 * h), f(1, 2)),
                (f(0), f(1, h)),
                ProjectiveMap(-2, 1, -h, (h + 1) // 2),
            )
        )
    return tuple(pieces)


@dataclass(frozen=True)
class PointFailure:
    x: Fraction
    reason: str
    image: Fraction | None = None
    claimed: Fraction | None = None
    actual: Fraction | None = None


@dataclass(frozen=True)
class VerificationReport:
    piece_name: str
    points: int
    failure: PointFailure | None

    @property
    def ok(self) -> bool:
        return self.failure is None


def _source_points(lo: Fraction, hi: Fraction, max_q: int):
    for q in range(1, max_q + 1):
        p_lo = (lo.numerator * q) // lo.denominator + 1
        for p in range(p_lo, (hi.numerator * q) // hi.denominator + 1):
            x = Fraction(p, q)
            if x.denominator == q and lo < x < hi:
                yield x


def verify_piece(
    w: str, piece: SimilarityPiece, max_q: int, side: str = "left"
) -> VerificationReport:
    """Check a piece on every reduced rational in its open source interval.

    Stops at the first failing point; per point the checks are: the image
    denominator is not a pole, the unreduced image is already in lowest terms,
    gcd(denominator, h_a) is preserved, the image lands strictly inside the
    target interval, and the mapped fringe length equals the actual one.
    """
    h_a = block_form(parse_word(w)).h_a
    m = piece.map
    points = 0
    for x in _source_points(piece.source[0], piece.source[1], max_q):
        points += 1

        def fail(reason: str, image=None, claimed=None, actual=None):
            return VerificationReport(
                piece.name, points, PointFailure(x, reason, image, claimed, actual)
            )

        rn, rd = m.raw_image(x)
        if rd == 0:
            return fail("pole")
        if gcd(rn, rd) != 1:
            return fail("unreduced image not coprime", Fraction(rn, rd))
        if gcd(rd, h_a) != gcd(x.denominator, h_a):
            return fail("gcd class not preserved", Fraction(rn, rd))
        image, claimed = m.apply(x, fringe_length(w, x, side))
        if not piece.target[0] < image < piece.target[1]:
            return fail("image outside target", image)
        actual = fringe_length(w, image, side)
        if claimed != actual:
            return fail("fringe length mismatch", image, claimed, actual)
    return VerificationReport(piece.name, points, None)
