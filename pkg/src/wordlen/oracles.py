"""Brute-force reference implementations.

These exist to be obviously correct, not fast: substring sets instead of
automata, exhaustive (q, p, t) scans instead of border arrays, per-level
from-scratch products instead of frontier caching, and a local Gaussian
elimination that shares no code with the fast span basis.  Every fast path
is required to agree with its oracle on the stated overlap domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .algebra import CapExceeded, GeneratorSet, LengthTrace
from .structure import QptDecomposition
from .words import Alphabet, ComplexityProfile, Word

DEFAULT_ENUMERATION_BUDGET = 100_000_000
NAIVE_PROFILE_CAP = 1_000
BRUTE_QPT_CAP = 30


class BudgetExceeded(RuntimeError):
    """The enumeration would exceed the configured budget."""


class LengthTooLarge(ValueError):
    """Input is beyond the stated domain of this brute-force path."""


@dataclass(frozen=True)
class WordSpace:
    """All words over a fixed alphabet up to a maximum length."""

    alphabet_size: int
    max_length: int
    budget: int = DEFAULT_ENUMERATION_BUDGET

    def __post_init__(self) -> None:
        if self.alphabet_size < 1 or self.max_length < 1 or self.budget < 1:
            raise ValueError("alphabet size, max length, and budget must be >= 1")

    def total_words(self) -> int:
        k = self.alphabet_size
        return sum(k**j for j in range(1, self.max_length + 1))


def enumerate_words(
    space: WordSpace, shard: tuple[int, int] | None = None
) -> Iterator[Word]:
    """Every word of length 1..max_length exactly once, in (length, lex) order.

    shard=(which, of) keeps only words whose running index is congruent to
    which mod of, giving a deterministic partition for parallel sweeps.
    """
    if space.total_words() > space.budget:
        raise BudgetExceeded(
            f"{space.total_words()} words exceed budget {space.budget}"
        )
    if shard is not None:
        which, of = shard
        if not 0 <= which < of:
            raise ValueError(f"invalid shard {shard}")
    alphabet = Alphabet.letters(space.alphabet_size)
    k = space.alphabet_size
    idx = 0
    for length in range(1, space.max_length + 1):
        for tup in product(range(k), repeat=length):
            if shard is None or idx % shard[1] == shard[0]:
                yield Word(tup, alphabet)
            idx += 1


def naive_profile(w: Word) -> ComplexityProfile:
    """Factor counts by literally collecting the substring set per length."""
    l = len(w)
    if l > NAIVE_PROFILE_CAP:
        raise LengthTooLarge(f"naive_profile handles length <= {NAIVE_PROFILE_CAP}")
    if l == 0:
        return ComplexityProfile((1,), 1)
    seq: Sequence = bytes(w.letters) if w.alphabet.size <= 256 else w.letters
    counts = [1]
    for n in range(1, l + 1):
        counts.append(len({seq[i : i + n] for i in range(l - n + 1)}))
    return ComplexityProfile(tuple(counts), sum(counts))


def brute_min_qpt(w: Word) -> QptDecomposition:
    """Try every (q, p, t), including degenerate periods longer than the
    middle segment; min cost, ties to smallest q then smallest t."""
    l = len(w)
    if l == 0:
        raise ValueError("brute_min_qpt requires a non-empty word")
    if l > BRUTE_QPT_CAP:
        raise LengthTooLarge(f"brute_min_qpt handles length <= {BRUTE_QPT_CAP}")
    letters = w.letters
    best_key = None
    best = (0, l, 0)
    for q in range(l + 1):
        for t in range(l - q + 1):
            for p in range(1, l + 1):
                ok = True
                for i in range(q, l - t - p):
                    if letters[i] != letters[i + p]:
                        ok = False
                        break
                if ok:
                    key = (q + p + t, q, t)
                    if best_key is None or key < best_key:
                        best_key = key
                        best = (q, p, t)
    return QptDecomposition(best[0], best[1], best[2], l)


class _GaussRows:
    """Forward-elimination row collection, independent of SpanBasis."""

    def __init__(self, modulus: int) -> None:
        self.p = modulus
        self.rows: list[tuple[int, list[int]]] = []

    def _reduced(self, vec: Sequence[int]) -> list[int]:
        p = self.p
        v = [x % p for x in vec]
        for col, row in self.rows:
            c = v[col]
            if c:
                f = c * pow(row[col], -1, p) % p
                for j in range(col, len(v)):
                    v[j] = (v[j] - f * row[j]) % p
        return v

    def insert(self, vec: Sequence[int]) -> bool:
        v = self._reduced(vec)
        for col, x in enumerate(v):
            if x:
                self.rows.append((col, v))
                self.rows.sort(key=lambda r: r[0])
                return True
        return False


def brute_length(
    S: GeneratorSet, cap: int, budget: int = 2_000_000
) -> LengthTrace:
    """Length of a generating set with every product recomputed from scratch.

    Each level multiplies out all |S|^i words fully; no frontier reuse, no
    shared span code.  Must agree with the fast trace wherever both finish.
    """
    k = len(S.gens)
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if k**cap > budget:
        raise BudgetExceeded(f"|S|^cap = {k**cap} exceeds budget {budget}")
    ambient = S.n * S.n
    span = _GaussRows(S.field.p)
    ident_vec = [int(i == j) for i in range(S.n) for j in range(S.n)]
    span.insert(ident_vec)
    dims = [1]
    for length in range(1, cap + 1):
        if dims[-1] == ambient:
            break
        grew = False
        for combo in product(S.gens, repeat=length):
            mat = combo[0]
            for g in combo[1:]:
                mat = mat @ g
            if span.insert(list(mat.vectorize())):
                grew = True
        if not grew:
            break
        dims.append(len(span.rows))
    else:
        if dims[-1] != ambient:
            raise CapExceeded(cap)
    return LengthTrace(tuple(dims), len(dims) - 1, dims[-1])
