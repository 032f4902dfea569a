"""Periodic (prefix, period, suffix) decompositions of finite words.

A word of length l splits as a prefix of length q, a core repeating with
period p, and a suffix of length t; the cost of the split is q + p + t.
Low factor counts force cheap splits and vice versa, and the verifiers here
return both sides of that equivalence so sweeps can detect violations
instead of assuming them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    FracExponent,
    Word,
    border_array,
    complexity_profile,
    factor_count,
)


class LengthMismatch(ValueError):
    """Decomposition declared for a different word length."""


class RangeViolation(ValueError):
    """Requested n (or window (n, m)) is outside the admissible range."""


class PreconditionUnmet(ValueError):
    """The operation's stated hypotheses do not hold for this input."""


class ShapeViolation(RuntimeError):
    """The three-phase profile shape failed at index n.

    This should be impossible; raising it signals an internal bug or a
    genuine counterexample, both of which must surface loudly.
    """

    def __init__(self, n: int, counts: tuple[int, ...]) -> None:
        super().__init__(f"profile shape violated at n={n}: counts={counts}")
        self.n = n
        self.counts = counts


@dataclass(frozen=True)
class QptDecomposition:
    """Split of a length-l word into prefix(q) + periodic core(p) + suffix(t)."""

    q: int
    p: int
    t: int
    l: int

    def __post_init__(self) -> None:
        if self.q < 0 or self.t < 0 or self.p < 1 or self.q + self.t > self.l:
            raise ValueError(
                f"invalid decomposition q={self.q} p={self.p} t={self.t} l={self.l}"
            )

    @property
    def cost(self) -> int:
        return self.q + self.p + self.t

    @property
    def core_exponent(self) -> FracExponent:
        """Exponent (l - q - t) / p of the periodic core."""
        return FracExponent(self.l - self.q - self.t, self.p)


@dataclass(frozen=True)
class ProfileShape:
    """Breakpoints of the increasing / constant / down-by-one profile phases."""

    m_star: int
    plateau_end: int
    peak: int


def decompose_check(w: Word, dec: QptDecomposition) -> bool:
    """Does w literally equal prefix(q) + core with period p + suffix(t)?

    Equivalent condition: w[i] == w[i+p] for all i in [q, l-t-p-1].  An empty
    range (core exponent below 1) passes vacuously.
    """
    l = len(w)
    if dec.l != l:
        raise LengthMismatch(f"decomposition is for length {dec.l}, word has {l}")
    letters = w.letters
    p = dec.p
    for i in range(dec.q, l - dec.t - p):
        if letters[i] != letters[i + p]:
            return False
    return True


def minimal_qpt(w: Word) -> QptDecomposition:
    """Minimal-cost decomposition; ties broken by smallest q, then smallest t.

    For each (q, t) the cheapest valid p is the smallest period of the middle
    segment, read off its border array; scanning q ascending with cost-based
    pruning keeps the search O(l^2).
    """
    l = len(w)
    if l == 0:
        raise ValueError("minimal_qpt requires a non-empty word")
    letters = w.letters
    best_cost = l + 2
    best = (0, l, 0)
    for q in range(l + 1):
        if q + 1 >= best_cost:
            break
        pi = border_array(letters[q:])
        for t in range(l - q + 1):
            if q + t + 1 >= best_cost:
                break
            seg_len = l - q - t
            p = 1 if seg_len == 0 else seg_len - pi[seg_len - 1]
            cost = q + p + t
            if cost < best_cost:
                best_cost = cost
                best = (q, p, t)
    return QptDecomposition(best[0], best[1], best[2], l)


def mh_equivalence(w: Word, n: int) -> tuple[bool, bool]:
    """Both sides of the equivalence f(n) <= n  <=>  min cost <= n.

    Returns (lhs, rhs) so a verifier can detect disagreement.  Requires
    1 <= n <= l/2.
    """
    l = len(w)
    if n < 1 or 2 * n > l:
        raise RangeViolation(f"need 1 <= n <= l/2, got n={n}, l={l}")
    lhs = factor_count(w, n) <= n
    rhs = minimal_qpt(w).cost <= n
    return lhs, rhs


def mh_general_equivalence(w: Word, n: int, m: int) -> tuple[bool, bool]:
    """Both sides of f(n) <= m  <=>  min cost <= m, for m <= n <= l - m."""
    l = len(w)
    if m < 1 or n < m or n > l - m:
        raise RangeViolation(f"need 1 <= m <= n <= l-m, got n={n}, m={m}, l={l}")
    lhs = factor_count(w, n) <= m
    rhs = minimal_qpt(w).cost <= m
    return lhs, rhs


def profile_shape(w: Word) -> ProfileShape:
    """Locate the three profile phases and assert they hold.

    m_star is the least n with f(n+1) <= f(n); the profile must then stay
    constant through l - f(m_star) + 1 and afterwards drop by exactly one
    per step.  A ShapeViolation names the first offending index.
    """
    l = len(w)
    if l == 0:
        raise ValueError("profile_shape requires a non-empty word")
    counts = complexity_profile(w).counts
    m_star = next((n for n in range(l) if counts[n + 1] <= counts[n]), None)
    if m_star is None:
        raise ShapeViolation(l, counts)
    peak = counts[m_star]
    plateau_end = l - peak + 1
    for n in range(m_star, plateau_end + 1):
        if counts[n] != peak:
            raise ShapeViolation(n, counts)
    for n in range(plateau_end, l):
        if counts[n + 1] != counts[n] - 1:
            raise ShapeViolation(n + 1, counts)
    return ProfileShape(m_star, plateau_end, peak)


def corollary_max_profile(w: Word, n: int) -> bool:
    """Given f(n) <= n with n <= l/2, is max_i f(i) <= n?

    Always true mathematically; returned as a bool so sweeps can report
    rather than assume.
    """
    l = len(w)
    if n < 1 or 2 * n > l:
        raise PreconditionUnmet(f"need 1 <= n <= l/2, got n={n}, l={l}")
    if factor_count(w, n) > n:
        raise PreconditionUnmet(f"need f(n) <= n at n={n}")
    return max(complexity_profile(w).counts) <= n
