from __future__ import annotations

import random

import pytest

from conftest import random_word, wd
from wordlen.algebra import CapExceeded, GeneratorSet
from wordlen.linalg import FMatrix, PrimeField
from wordlen.oracles import (
    BudgetExceeded,
    LengthTooLarge,
    WordSpace,
    brute_length,
    brute_min_qpt,
    enumerate_words,
    naive_profile,
)
from wordlen.structure import QptDecomposition, minimal_qpt
from wordlen.words import Alphabet, Word, parse_word

F5 = PrimeField(5)
E12 = FMatrix.from_rows(F5, [[0, 1], [0, 0]])
E21 = FMatrix.from_rows(F5, [[0, 0], [1, 0]])


class TestEnumerateWords:
    def test_small_binary(self):
        rendered = [w.render() for w in enumerate_words(WordSpace(2, 2))]
        assert rendered == ["a", "b", "aa", "ab", "ba", "bb"]

    def test_unary(self):
        rendered = [w.render() for w in enumerate_words(WordSpace(1, 3))]
        assert rendered == ["a", "aa", "aaa"]

    def test_counts_per_length(self):
        per_length: dict[int, int] = {}
        for w in enumerate_words(WordSpace(3, 4)):
            per_length[len(w)] = per_length.get(len(w), 0) + 1
        assert per_length == {1: 3, 2: 9, 3: 27, 4: 81}
        assert sum(per_length.values()) == 120

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            list(enumerate_words(WordSpace(2, 10, budget=100)))

    def test_shards_partition(self):
        full = [w.letters for w in enumerate_words(WordSpace(2, 6))]
        pieces = [
            [w.letters for w in enumerate_words(WordSpace(2, 6), shard=(i, 3))]
            for i in range(3)
        ]
        assert sorted(sum(pieces, [])) == sorted(full)
        assert sum(len(p) for p in pieces) == len(full)

    def test_shard_validation(self):
        with pytest.raises(ValueError):
            list(enumerate_words(WordSpace(2, 2), shard=(3, 3)))


class TestNaiveProfile:
    def test_worked_example(self):
        prof = naive_profile(wd("abbabbabbb"))
        assert prof.total == 32
        assert prof.counts[0] == 1

    def test_empty(self):
        prof = naive_profile(parse_word("", Alphabet.letters(2)))
        assert prof.counts == (1,)

    def test_length_cap(self):
        w = Word((0,) * 1001, Alphabet.letters(2))
        with pytest.raises(LengthTooLarge):
            naive_profile(w)


class TestBruteMinQpt:
    def test_worked_example(self):
        assert brute_min_qpt(wd("abbabbabaa")) == QptDecomposition(0, 3, 2, 10)

    def test_unary(self):
        assert brute_min_qpt(wd("aaaa")) == QptDecomposition(0, 1, 0, 4)

    def test_length_cap(self):
        with pytest.raises(LengthTooLarge):
            brute_min_qpt(Word((0,) * 31, Alphabet.letters(2)))

    def test_agreement_exhaustive_binary(self):
        for w in enumerate_words(WordSpace(2, 16)):
            assert minimal_qpt(w) == brute_min_qpt(w), w.render()

    def test_agreement_random_longer(self):
        rng = random.Random(101)
        for _ in range(150):
            w = random_word(rng, 30, alphabet_sizes=(2, 3))
            assert minimal_qpt(w) == brute_min_qpt(w), w.render()


class TestBruteLength:
    def test_matrix_unit_pair(self):
        trace = brute_length(GeneratorSet(F5, 2, (E12, E21)), cap=4)
        assert trace.dims == (1, 3, 4) and trace.length == 2

    def test_identity(self):
        trace = brute_length(GeneratorSet(F5, 2, (FMatrix.identity(F5, 2),)), cap=3)
        assert trace.length == 0

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            brute_length(GeneratorSet(F5, 2, (E12, E21)), cap=4, budget=10)

    def test_cap_exceeded(self):
        with pytest.raises(CapExceeded):
            brute_length(GeneratorSet(F5, 2, (E12, E21)), cap=1)
