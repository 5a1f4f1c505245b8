import pytest
from hypothesis import given, strategies as st

from zigfringe import (
    BlockForm,
    EmptyWord,
    IllegalCharacter,
    PowerOfSingleLetter,
    block_form,
    block_rotations,
    cyclically_equal,
    letter_counts,
    mirror,
    parse_word,
    partial_sums,
    word_of_blocks,
)

words = st.text(alphabet="ab", min_size=2, max_size=12).filter(
    lambda w: "a" in w and "b" in w
)


def test_parse_word_validates():
    assert parse_word("abaab") == "abaab"
    with pytest.raises(EmptyWord):
        parse_word("")
    with pytest.raises(IllegalCharacter):
        parse_word("abc")
    with pytest.raises(IllegalCharacter):
        parse_word("aXb")


def test_mirror_swaps_letters():
    assert mirror("abaab") == "babba"
    assert mirror("b") == "a"


@given(words)
def test_mirror_is_an_involution(w):
    assert mirror(mirror(w)) == w


def test_letter_counts():
    assert letter_counts("abaab") == (3, 2)
    assert letter_counts("bbb" + "a") == (1, 3)


@pytest.mark.parametrize(
    "word, alphas, betas",
    [
        ("abaab", (1, 2), (1, 1)),
        ("baab", (2,), (2,)),
        ("bab", (1,), (2,)),
        ("ab", (1,), (1,)),
        ("ababb", (1, 1), (1, 2)),
        ("aaabaaabbbb", (3, 3), (1, 4)),
        ("abbaabaaabbbb", (3, 2, 1), (1, 2, 4)),
        ("abbbaabaaabbbb", (3, 2, 1), (1, 3, 4)),
        ("abbbababaaabbbb", (3, 1, 1, 1), (1, 1, 3, 4)),
        ("abbbaabbaaabbbb", (3, 2, 1), (2, 3, 4)),
        ("abbbababbaaabbbb", (3, 1, 1, 1), (2, 1, 3, 4)),
        ("abaabaaabbbb", (3, 2, 1), (1, 1, 4)),
    ],
)
def test_block_form_frozen(word, alphas, betas):
    assert block_form(word) == BlockForm(alphas, betas)


def test_block_form_rejects_single_letter_powers():
    for w in ("a", "bbb"):
        with pytest.raises(PowerOfSingleLetter):
            block_form(w)


def test_block_form_is_rotation_invariant():
    w = "abbaabaaabbbb"
    forms = {block_form(w[i:] + w[:i]) for i in range(len(w))}
    assert forms == {block_form(w)}


def test_block_form_counts_match_word():
    bf = block_form("abbbababbaaabbbb")
    assert bf.n == 4
    assert bf.h_a == 6
    assert bf.h_b == 10


def test_blockform_validation():
    with pytest.raises(ValueError):
        BlockForm((1, 2), (1,))
    with pytest.raises(ValueError):
        BlockForm((0,), (1,))
    with pytest.raises(ValueError):
        BlockForm((), ())


def test_word_of_blocks_layout():
    bf = BlockForm((1, 2), (1, 1))
    assert word_of_blocks(bf) == "b" + "aa" + "b" + "a"


@given(words)
def test_word_of_blocks_round_trip(w):
    bf = block_form(w)
    assert cyclically_equal(word_of_blocks(bf), w)
    assert block_form(word_of_blocks(bf)) == bf


@given(words)
def test_block_form_counts_property(w):
    bf = block_form(w)
    h_a, h_b = letter_counts(w)
    assert sum(bf.alphas) == h_a
    assert sum(bf.betas) == h_b
    assert len(bf.alphas) == bf.n


def test_block_rotations_covers_all_starts():
    rotations = block_rotations(block_form("abaab"))
    assert BlockForm((1, 2), (1, 1)) in rotations
    assert BlockForm((2, 1), (1, 1)) in rotations
    assert len(rotations) == 2


def test_partial_sums():
    bf = block_form("abaab")
    assert partial_sums(bf) == (1, 3)
    assert partial_sums(bf, copies=2) == (1, 3, 4, 6)
    with pytest.raises(ValueError):
        partial_sums(bf, copies=0)


def test_cyclically_equal():
    assert cyclically_equal("abaab", "aabab")
    assert not cyclically_equal("abaab", "aabba")
    assert not cyclically_equal("ab", "abab")
