"""Shared test helpers and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from wordlen.words import Alphabet, Word, parse_word

_FULL = Alphabet.letters(26)


def wd(text: str) -> Word:
    """Shorthand: parse single-char text over the full a..z alphabet."""
    return parse_word(text, _FULL)


def random_word(rng: random.Random, max_len: int, alphabet_sizes=(2, 3, 4)) -> Word:
    k = rng.choice(alphabet_sizes)
    l = rng.randint(1, max_len)
    return Word(tuple(rng.randrange(k) for _ in range(l)), Alphabet.letters(k))


@st.composite
def words_st(draw, min_size: int = 0, max_size: int = 40, max_alphabet: int = 4) -> Word:
    k = draw(st.integers(1, max_alphabet))
    letters = draw(st.lists(st.integers(0, k - 1), min_size=min_size, max_size=max_size))
    return Word(tuple(letters), Alphabet.letters(k))
