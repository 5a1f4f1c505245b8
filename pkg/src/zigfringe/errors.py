"""Domain errors shared across the package.

Every error raised by the library proper derives from DomainError, so the CLI
can map "the input was legal but the computation rejects it" to a single exit
code while genuine usage errors stay separate.
"""

__all__ = [
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
]


class DomainError(Exception):
    """Base class for all library-level errors."""


class EmptyWord(DomainError):
    """A word must contain at least one letter."""


class IllegalCharacter(DomainError):
    """Words are written over the alphabet {a, b} only."""


class PowerOfSingleLetter(DomainError):
    """Block decomposition needs both letters present."""


class ZeroDenominator(DomainError):
    """Rationals require a nonzero denominator."""


class NoSuchLetter(DomainError):
    """The cyclic XY-word lacks the symbol a requested letter acts through."""


class EnumerationCapExceeded(DomainError):
    """A configured enumeration cap was hit; results are never truncated."""


class NoFeasiblePartition(DomainError):
    """No non-negative integer partition meets the residual/caps."""


class NotADivisor(DomainError):
    """The requested g does not divide the word's a-count."""


class NotPrime(DomainError):
    """The closed form requires a prime a-count."""


class PoleHit(DomainError):
    """A projective map was evaluated on its pole."""


class IoFailure(DomainError):
    """An output destination could not be written."""
