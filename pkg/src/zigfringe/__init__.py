"""Exact extremal rotation numbers and fringe lengths for positive words.

Three independent routes to fringe lengths are exposed: brute force over
cyclic XY-words (max_rot), the stairstep linear programs (stairstep_min_t),
and the closed-form residue sums (sigma, fringe_length).  selfsim verifies
that fringe plots are projectively self-similar, piece by piece.
"""
from .errors import (
    DomainError,
    EmptyWord,
    EnumerationCapExceeded,
    IllegalCharacter,
    IoFailure,
    NoFeasiblePartition,
    NoSuchLetter,
    NotADivisor,
    NotPrime,
    PoleHit,
    PowerOfSingleLetter,
    ZeroDenominator,
)
from .fringe import (
    divisors,
    fringe_length,
    fringe_target,
    lambda_sum,
    prime_case_fringe,
    sigma,
    sigma_bounds,
    sigma_window,
)
from .plots import (
    FringeSeries,
    ZigguratGrid,
    fringe_series,
    grid_csv,
    grid_pgm,
    grid_svg,
    series_csv,
    series_svg,
    ziggurat_grid,
)
from .rationals import Rational, farey, format_rational, parse_rational, reduce
from .selfsim import (
    ProjectiveMap,
    SimilarityPiece,
    VerificationReport,
    abaab_pieces,
    prime_pieces,
    reflect_piece,
    verify_piece,
)
from .stairstep import stairstep_min_t
from .words import (
    BlockForm,
    block_form,
    block_rotations,
    cyclically_equal,
    letter_counts,
    mirror,
    parse_word,
    partial_sums,
    word_of_blocks,
)
from .xy import (
    act_letter,
    act_word,
    kernel_name,
    linear_words,
    max_rot,
    necklaces,
    rot_interval,
    rot_w,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DomainError",
    "EmptyWord",
    "IllegalCharacter",
    "PowerOfSingleLetter",
    "ZeroDenominator",
    "NoSuchLetter",
    "EnumerationCapExceeded",
    "NoFeasiblePartition",
    "NotADivisor",
    "NotPrime",
    "PoleHit",
    "IoFailure",
    "Rational",
    "reduce",
    "parse_rational",
    "format_rational",
    "farey",
    "parse_word",
    "mirror",
    "letter_counts",
    "BlockForm",
    "block_form",
    "block_rotations",
    "word_of_blocks",
    "partial_sums",
    "cyclically_equal",
    "act_letter",
    "act_word",
    "rot_w",
    "necklaces",
    "linear_words",
    "max_rot",
    "rot_interval",
    "kernel_name",
    "stairstep_min_t",
    "divisors",
    "lambda_sum",
    "sigma",
    "sigma_window",
    "sigma_bounds",
    "fringe_length",
    "fringe_target",
    "prime_case_fringe",
    "ProjectiveMap",
    "SimilarityPiece",
    "reflect_piece",
    "abaab_pieces",
    "prime_pieces",
    "verify_piece",
    "VerificationReport",
    "FringeSeries",
    "ZigguratGrid",
    "fringe_series",
    "ziggurat_grid",
    "series_csv",
    "series_svg",
    "grid_csv",
    "grid_pgm",
    "grid_svg",
]
