"""Positive words over {a, b} and their cyclic block decomposition.

A word is a plain validated string. The block form rewrites a cyclic rotation
of the word as b^{beta_n} a^{alpha_n} ... b^{beta_1} a^{alpha_1}; blocks are
indexed from the right, so block i is the pair (alpha_i, beta_i) with beta_i
the b-run applied immediately after a^{alpha_i} when letters act right to
left.  All downstream quantities are invariant under the choice of rotation;
a fixed canonical rotation keeps outputs deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyWord, IllegalCharacter, PowerOfSingleLetter

__all__ = [
    "parse_word",
    "mirror",
    "letter_counts",
    "BlockForm",
    "block_form",
    "block_rotations",
    "word_of_blocks",
    "partial_sums",
    "cyclically_equal",
]

_MIRROR = str.maketrans("ab", "ba")


def parse_word(text: str) -> str:
    """Validate a word: non-empty, letters drawn from {a, b}."""
    if not text:
        raise EmptyWord("word must have at least one letter")
    bad = set(text) - {"a", "b"}
    if bad:
        raise IllegalCharacter(f"{text!r} contains {sorted(bad)}")
    return text


def mirror(w: str) -> str:
    """Swap the roles of a and b (converts right fringes to left ones)."""
    return w.translate(_MIRROR)


def letter_counts(w: str) -> tuple[int, int]:
    """(h_a, h_b): number of a's and of b's."""
    return w.count("a"), w.count("b")


@dataclass(frozen=True)
class BlockForm:
    """Cyclic decomposition b^{beta_n} a^{alpha_n} ... b^{beta_1} a^{alpha_1}."""

    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.alphas) != len(self.betas) or not self.alphas:
            raise ValueError("alphas and betas must be equal-length, non-empty")
        if any(x < 1 for x in self.alphas + self.betas):
            raise ValueError("block exponents must be >= 1")

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def h_a(self) -> int:
        return sum(self.alphas)

    @property
    def h_b(self) -> int:
        return sum(self.betas)


def block_form(w: str) -> BlockForm:
    """Decompose w (up to cyclic rotation) into (alpha_i, beta_i) blocks.

    Canonical rotation: start at the leftmost cyclic b-run of maximal length.
    Any rotation would do mathematically; this one is fixed for determinism.
    """
    length = len(w)
    if "a" not in w or "b" not in w:
        raise PowerOfSingleLetter(w)
    starts = [i for i in range(length) if w[i] == "b" and w[i - 1] == "a"]
    runs = []
    for i in starts:
        j = i
        while w[j % length] == "b":
            j += 1
        runs.append((j - i, i))
    best = max(length_ for length_, _ in runs)
    start = min(i for length_, i in runs if length_ == best)
    s = w[start:] + w[:start]
    pairs = []  # (alpha, beta) scanned left to right
    i = 0
    while i < length:
        j = i
        while j < length and s[j] == "b":
            j += 1
        k = j
        while k < length and s[k] == "a":
            k += 1
        pairs.append((k - j, j - i))
        i = k
    pairs.reverse()  # block 1 is the rightmost b^beta a^alpha factor
    return BlockForm(tuple(a for a, _ in pairs), tuple(b for _, b in pairs))


def block_rotations(bf: BlockForm) -> list[BlockForm]:
    """All n cyclic rotations of the block sequence."""
    n = bf.n
    return [
        BlockForm(bf.alphas[i:] + bf.alphas[:i], bf.betas[i:] + bf.betas[:i])
        for i in range(n)
    ]


def word_of_blocks(bf: BlockForm) -> str:
    """The literal string b^{beta_n} a^{alpha_n} ... b^{beta_1} a^{alpha_1}."""
    return "".join(
        "b" * beta + "a" * alpha
        for alpha, beta in zip(reversed(bf.alphas), reversed(bf.betas))
    )


def partial_sums(bf: BlockForm, copies: int = 1) -> tuple[int, ...]:
    """A_i = alpha_1 + ... + alpha_i with alpha extended periodically.

    Satisfies A_{n+i} = A_i + h_a.
    """
    if copies < 1:
        raise ValueError("copies must be >= 1")
    out = []
    acc = 0
    for i in range(bf.n * copies):
        acc += bf.alphas[i % bf.n]
        out.append(acc)
    return tuple(out)


def cyclically_equal(u: str, v: str) -> bool:
    """True when u is a cyclic rotation of v."""
    return len(u) == len(v) and u in v + v
