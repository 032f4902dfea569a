"""Finite words over explicit alphabets.

Letters are integer ids into an ordered alphabet; the alphabet order fixes
parsing, rendering, and the letter order used for shortlex enumeration
elsewhere.  Factor counting deliberately has two implementations: the
suffix-automaton fast path lives here, a substring-set oracle lives in
``wordlen.oracles``, and the test suite requires that they agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from string import ascii_lowercase
from typing import Iterator, Sequence


class UnknownToken(ValueError):
    """A token of the input text is not a letter of the alphabet."""

    def __init__(self, token: str, position: int) -> None:
        super().__init__(f"unknown token {token!r} at position {position}")
        self.token = token
        self.position = position


class DenominatorMismatch(ValueError):
    """Fractional-power denominator does not equal the base word length."""


class LengthOutOfRange(ValueError):
    """Requested factor length is outside [0, len(word)]."""


class EmptyFactor(ValueError):
    """Occurrence queries are defined for non-empty factors only."""


def tokenize(text: str) -> list[str]:
    """Split word text: comma-separated tokens if a comma appears, else one
    token per character.  Empty text is the empty word."""
    if not text:
        return []
    if "," in text:
        return text.split(",")
    return list(text)


@dataclass(frozen=True)
class Alphabet:
    """Ordered tuple of distinct tokens; the order defines letter ids 0..k-1."""

    symbols: tuple[str, ...]
    _ids: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must be non-empty")
        if any(not s for s in self.symbols):
            raise ValueError("alphabet tokens must be non-empty strings")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet tokens must be pairwise distinct")
        object.__setattr__(self, "_ids", {s: i for i, s in enumerate(self.symbols)})

    @property
    def size(self) -> int:
        return len(self.symbols)

    def id_of(self, token: str) -> int | None:
        return self._ids.get(token)

    @classmethod
    def letters(cls, k: int) -> "Alphabet":
        """Canonical a, b, c, ... alphabet of size k (k <= 26)."""
        if not 1 <= k <= 26:
            raise ValueError("letters() supports sizes 1..26")
        return cls(tuple(ascii_lowercase[:k]))

    @classmethod
    def indices(cls, k: int) -> "Alphabet":
        """Digit-token alphabet 0, 1, ...; used for generator-index words."""
        if k < 1:
            raise ValueError("alphabet size must be >= 1")
        return cls(tuple(str(i) for i in range(k)))

    @classmethod
    def from_spec(cls, spec: str) -> "Alphabet":
        """Explicit alphabet text: comma-separated tokens, else one char each."""
        return cls(tuple(tokenize(spec)))


@dataclass(frozen=True)
class Word:
    """Immutable sequence of letter ids bound to an alphabet."""

    letters: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if self.letters:
            if min(self.letters) < 0 or max(self.letters) >= self.alphabet.size:
                raise ValueError("letter id out of range for the alphabet")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def factor(self, start: int, end: int) -> "Word":
        """The factor spanning positions [start, end)."""
        if not 0 <= start <= end <= len(self.letters):
            raise IndexError(f"factor span [{start}, {end}) out of range")
        return Word(self.letters[start:end], self.alphabet)

    def render(self) -> str:
        tokens = [self.alphabet.symbols[a] for a in self.letters]
        if all(len(s) == 1 for s in self.alphabet.symbols):
            return "".join(tokens)
        return ",".join(tokens)


@dataclass(frozen=True)
class FracExponent:
    """Unreduced fraction num/den: (6, 3) and (2, 1) are distinct powers.

    den is pinned to the base word length; num is the target length.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num < 0 or self.den < 1:
            raise ValueError(f"invalid fractional exponent {self.num}/{self.den}")


@dataclass(frozen=True)
class ComplexityProfile:
    """Factor counts f(0..l) and their sum, the total complexity."""

    counts: tuple[int, ...]
    total: int


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse token text into a word; raises UnknownToken on foreign tokens."""
    ids = []
    for pos, token in enumerate(tokenize(text)):
        idx = alphabet.id_of(token)
        if idx is None:
            raise UnknownToken(token, pos)
        ids.append(idx)
    return Word(tuple(ids), alphabet)


def fractional_power(base: Word, exp: FracExponent) -> Word:
    """Repeat base with period len(base) out to exp.num letters."""
    if exp.den != len(base):
        raise DenominatorMismatch(
            f"denominator {exp.den} != base length {len(base)}"
        )
    period = len(base)
    letters = base.letters
    return Word(tuple(letters[i % period] for i in range(exp.num)), base.alphabet)


def factor_count(w: Word, n: int) -> int:
    """Number of distinct factors of length n in w."""
    l = len(w)
    if n < 0 or n > l:
        raise LengthOutOfRange(f"factor length {n} outside [0, {l}]")
    if n == 0:
        return 1
    letters = w.letters
    return len({letters[i : i + n] for i in range(l - n + 1)})


def border_array(letters: Sequence[int]) -> list[int]:
    """Longest proper border of each prefix (the KMP failure function)."""
    n = len(letters)
    pi = [0] * n
    k = 0
    for i in range(1, n):
        a = letters[i]
        while k and letters[k] != a:
            k = pi[k - 1]
        if letters[k] == a:
            k += 1
        pi[i] = k
    return pi


class SuffixAutomaton:
    """Online suffix automaton over integer letters.

    Each non-initial state covers the factor lengths
    (maxlen(link(s)), maxlen(s)], so distinct-factor counts per length fall
    out of one difference-array pass over the states.
    """

    def __init__(self, letters: Sequence[int] = ()) -> None:
        self._maxlen = [0]
        self._link = [-1]
        self._next: list[dict[int, int]] = [{}]
        self._last = 0
        for a in letters:
            self.extend(a)

    def extend(self, a: int) -> None:
        maxlen, link, nxt = self._maxlen, self._link, self._next
        cur = len(maxlen)
        maxlen.append(maxlen[self._last] + 1)
        link.append(-1)
        nxt.append({})
        p = self._last
        while p != -1 and a not in nxt[p]:
            nxt[p][a] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = nxt[p][a]
            if maxlen[p] + 1 == maxlen[q]:
                link[cur] = q
            else:
                clone = len(maxlen)
                maxlen.append(maxlen[p] + 1)
                link.append(link[q])
                nxt.append(dict(nxt[q]))
                while p != -1 and nxt[p].get(a) == q:
                    nxt[p][a] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        self._last = cur

    @property
    def state_count(self) -> int:
        return len(self._maxlen)

    def distinct_factor_count(self) -> int:
        """Number of distinct non-empty factors: the sum of state spans."""
        maxlen, link = self._maxlen, self._link
        return sum(maxlen[v] - maxlen[link[v]] for v in range(1, len(maxlen)))

    def length_counts(self, max_n: int) -> list[int]:
        """f(1..max_n) via a difference array over state spans."""
        diff = [0] * (max_n + 2)
        maxlen, link = self._maxlen, self._link
        for v in range(1, len(maxlen)):
            lo = maxlen[link[v]] + 1
            if lo > max_n:
                continue
            diff[lo] += 1
            hi = maxlen[v]
            diff[(hi if hi < max_n else max_n) + 1] -= 1
        counts = []
        run = 0
        for n in range(1, max_n + 1):
            run += diff[n]
            counts.append(run)
        return counts


def complexity_profile(w: Word) -> ComplexityProfile:
    """f(0..l) plus the total complexity, via the suffix automaton."""
    l = len(w)
    if l == 0:
        return ComplexityProfile((1,), 1)
    counts = [1] + SuffixAutomaton(w.letters).length_counts(l)
    return ComplexityProfile(tuple(counts), sum(counts))


def count_distinct_factors(w: Word) -> int:
    """Total complexity: distinct factors of every length, empty included."""
    if len(w) == 0:
        return 1
    return SuffixAutomaton(w.letters).distinct_factor_count() + 1


def _occurrences(haystack: tuple[int, ...], needle: tuple[int, ...]) -> Iterator[int]:
    f = len(needle)
    for i in range(len(haystack) - f + 1):
        if haystack[i : i + f] == needle:
            yield i


def _check_factor_query(w: Word, factor: Word) -> None:
    if len(factor) == 0:
        raise EmptyFactor("factor must be non-empty")
    if w.alphabet != factor.alphabet:
        raise ValueError("word and factor use different alphabets")


def is_repeated(w: Word, factor: Word) -> bool:
    """True iff factor occurs at two or more start positions in w."""
    _check_factor_query(w, factor)
    count = 0
    for _ in _occurrences(w.letters, factor.letters):
        count += 1
        if count >= 2:
            return True
    return False


def is_right_special(w: Word, factor: Word) -> bool:
    """True iff occurrences of factor are followed by >= 2 distinct letters."""
    _check_factor_query(w, factor)
    letters = w.letters
    f = len(factor)
    followers: set[int] = set()
    for i in _occurrences(letters, factor.letters):
        if i + f < len(letters):
            followers.add(letters[i + f])
            if len(followers) >= 2:
                return True
    return False
