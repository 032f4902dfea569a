"""Lengths of matrix generating sets and irreducible-word machinery.

Products of generators are words over the generator alphabet; the span of
all products of length <= i grows with i and the length of the set is the
last i at which it grows.  A word is reducible when its product already
lies in the span of strictly shorter products; searches below exploit that
a word with a reducible prefix is itself reducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .linalg import FMatrix, PrimeField, SpanBasis, load_matrix_set, min_poly
from .powers import Exponent, max_factor_exponent
from .words import Alphabet, Word, count_distinct_factors

DEFAULT_SEARCH_BUDGET = 2_000_000


class CapExceeded(RuntimeError):
    """Span dimensions were still growing when the step cap was reached."""

    def __init__(self, max_len: int) -> None:
        super().__init__(f"still growing after {max_len} steps")
        self.max_len = max_len


class IndexOutOfRange(ValueError):
    """A generator index in a word is outside the generator list."""


class SearchBudgetExceeded(RuntimeError):
    """The word enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered matrix generators; the order fixes the shortlex letter order."""

    field: PrimeField
    n: int
    gens: tuple[FMatrix, ...]

    def __post_init__(self) -> None:
        if not self.gens:
            raise ValueError("generator set must be non-empty")
        for g in self.gens:
            if g.field != self.field or g.n != self.n:
                raise ValueError("generators must share the field and size")

    @classmethod
    def from_file(cls, source: str | Path | Mapping) -> "GeneratorSet":
        field, n, mats = load_matrix_set(source)
        return cls(field, n, tuple(mats))

    @property
    def word_alphabet(self) -> Alphabet:
        return Alphabet.indices(len(self.gens))


@dataclass(frozen=True)
class LengthTrace:
    """Dimensions of the spans of products of length <= i, up to the last
    strict increase; length is the index of that increase."""

    dims: tuple[int, ...]
    length: int
    generated_dim: int


@dataclass(frozen=True)
class LiwResult:
    """Lexicographically minimal irreducible word of a given length."""

    i: int
    word: tuple[int, ...]
    complexity_total: int


@dataclass(frozen=True)
class LiwComplexityEntry:
    i: int
    word: tuple[int, ...]
    complexity_total: int
    dim_bound: int
    ok: bool


@dataclass(frozen=True)
class LiwComplexityReport:
    length: int
    generated_dim: int
    entries: tuple[LiwComplexityEntry, ...]

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)


@dataclass(frozen=True)
class PowerFreeEntry:
    i: int
    word: tuple[int, ...]
    exponent: Exponent
    limit: int
    ok: bool


@dataclass(frozen=True)
class PowerFreeReport:
    length: int
    limit: int
    entries: tuple[PowerFreeEntry, ...]

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)


def length_trace(S: GeneratorSet, max_len: int) -> LengthTrace:
    """Grow the span of products breadth-first until it stabilizes.

    Only products that were independent when inserted are kept on the
    frontier; multiplying just frontier x generators is enough because a
    dependent product's extensions are spanned by extensions of the words
    it depends on.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    ambient = S.n * S.n
    basis = SpanBasis(ambient, S.field)
    ident = FMatrix.identity(S.field, S.n)
    basis.insert(ident.vectorize())
    dims = [basis.dim]
    frontier = [ident]
    step = 0
    while True:
        if basis.dim == ambient:
            break
        step += 1
        if step > max_len:
            raise CapExceeded(max_len)
        new_frontier = []
        for mat in frontier:
            for g in S.gens:
                prod = mat @ g
                if basis.insert(prod.vectorize()):
                    new_frontier.append(prod)
        if not new_frontier:
            break
        dims.append(basis.dim)
        frontier = new_frontier
    return LengthTrace(tuple(dims), len(dims) - 1, basis.dim)


def _level_bases(S: GeneratorSet, upto: int) -> list[SpanBasis]:
    """Snapshots of the span bases for product lengths 0..upto."""
    basis = SpanBasis(S.n * S.n, S.field)
    ident = FMatrix.identity(S.field, S.n)
    basis.insert(ident.vectorize())
    bases = [basis.copy()]
    frontier = [ident]
    for _ in range(upto):
        new_frontier = []
        for mat in frontier:
            for g in S.gens:
                prod = mat @ g
                if basis.insert(prod.vectorize()):
                    new_frontier.append(prod)
        frontier = new_frontier
        bases.append(basis.copy())
    return bases


def _product(word: Sequence[int], S: GeneratorSet) -> FMatrix:
    prod = S.gens[word[0]]
    for idx in word[1:]:
        prod = prod @ S.gens[idx]
    return prod


def is_reducible(word: Sequence[int], S: GeneratorSet) -> bool:
    """Is the product of this word in the span of strictly shorter products?"""
    j = len(word)
    if j < 1:
        raise ValueError("word must be non-empty")
    k = len(S.gens)
    for idx in word:
        if not 0 <= idx < k:
            raise IndexOutOfRange(f"generator index {idx} outside [0, {k})")
    bases = _level_bases(S, j - 1)
    return bases[j - 1].contains(_product(word, S).vectorize())


def _liw_search(S: GeneratorSet, bases: list[SpanBasis], i: int) -> tuple[int, ...] | None:
    """Depth-first lexicographic scan over words of length i.

    A prefix whose product lies in the span of shorter products makes every
    extension reducible, so such subtrees are skipped; the first full-depth
    survivor is the lexicographic minimum.
    """
    gens = S.gens
    k = len(gens)
    word: list[int] = []

    def extend(prod: FMatrix | None, depth: int) -> bool:
        for letter in range(k):
            nxt = gens[letter] if prod is None else prod @ gens[letter]
            if bases[depth].contains(nxt.vectorize()):
                continue
            word.append(letter)
            if depth + 1 == i or extend(nxt, depth + 1):
                return True
            word.pop()
        return False

    return tuple(word) if extend(None, 0) else None


def _word_complexity(word: Sequence[int], k: int) -> int:
    return count_distinct_factors(Word(tuple(word), Alphabet.indices(k)))


def liw(S: GeneratorSet, i: int, budget: int = DEFAULT_SEARCH_BUDGET) -> LiwResult | None:
    """Lexicographically minimal irreducible word of length i, or None.

    None means no irreducible word of that length exists, which happens
    exactly when i exceeds the length of the set.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    k = len(S.gens)
    if k**i > budget:
        raise SearchBudgetExceeded(f"|S|^i = {k**i} exceeds budget {budget}")
    bases = _level_bases(S, i - 1)
    found = _liw_search(S, bases, i)
    if found is None:
        return None
    return LiwResult(i, found, _word_complexity(found, k))


def check_liw_complexity(
    S: GeneratorSet, budget: int = DEFAULT_SEARCH_BUDGET
) -> LiwComplexityReport:
    """Total complexity of each minimal irreducible word versus the
    generated dimension; the bound must hold for every length."""
    trace = length_trace(S, max_len=S.n * S.n)
    dim = trace.generated_dim
    k = len(S.gens)
    if trace.length >= 1 and k**trace.length > budget:
        raise SearchBudgetExceeded(
            f"|S|^l(S) = {k**trace.length} exceeds budget {budget}"
        )
    bases = _level_bases(S, max(trace.length - 1, 0))
    entries = []
    for i in range(1, trace.length + 1):
        found = _liw_search(S, bases, i)
        if found is None:
            raise RuntimeError(f"no irreducible word of length {i} <= l(S)")
        c = _word_complexity(found, k)
        entries.append(LiwComplexityEntry(i, found, c, dim, c <= dim))
    return LiwComplexityReport(trace.length, dim, tuple(entries))


def check_irreducible_power_free(
    S: GeneratorSet, m: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> PowerFreeReport:
    """Max factor exponent of each minimal irreducible word versus m - 1.

    m is the max minimal-polynomial degree in play (matrix size for a full
    matrix algebra); requires field size > m.
    """
    if S.field.p <= m:
        raise ValueError(f"need field size > m = {m}")
    trace = length_trace(S, max_len=S.n * S.n)
    k = len(S.gens)
    if trace.length >= 1 and k**trace.length > budget:
        raise SearchBudgetExceeded(
            f"|S|^l(S) = {k**trace.length} exceeds budget {budget}"
        )
    bases = _level_bases(S, max(trace.length - 1, 0))
    entries = []
    limit = m - 1
    for i in range(1, trace.length + 1):
        found = _liw_search(S, bases, i)
        if found is None:
            raise RuntimeError(f"no irreducible word of length {i} <= l(S)")
        exp, _ = max_factor_exponent(Word(found, Alphabet.indices(k)))
        entries.append(PowerFreeEntry(i, found, exp, limit, exp.value <= limit))
    return PowerFreeReport(trace.length, limit, tuple(entries))


def estimate_m_star(
    S: GeneratorSet, word_len_cap: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> int:
    """Max minimal-polynomial degree over products of length <= cap.

    A lower estimate of the true supremum over all products (there are
    infinitely many words); always bounded above by the matrix size.
    Distinct product matrices are visited once, since equal products have
    equal extensions.
    """
    if word_len_cap < 1:
        raise ValueError("word_len_cap must be >= 1")
    k = len(S.gens)
    total = sum(k**i for i in range(1, word_len_cap + 1))
    if total > budget:
        raise SearchBudgetExceeded(f"{total} words exceed budget {budget}")
    ident = FMatrix.identity(S.field, S.n)
    seen = {ident.entries}
    frontier = [ident]
    best = 1
    for _ in range(word_len_cap):
        nxt = []
        for mat in frontier:
            for g in S.gens:
                prod = mat @ g
                if prod.entries in seen:
                    continue
                seen.add(prod.entries)
                nxt.append(prod)
                deg = min_poly(prod).degree
                if deg > best:
                    best = deg
        if not nxt:
            break
        frontier = nxt
    return best
