"""Exhaustive theorem sweeps and fast-versus-oracle cross validation.

Each sweep walks a word space (optionally one deterministic shard of it),
records every violation as a dict, and returns a report whose summary
carries the words_checked / max_length / alphabet_size record the CLI
prints.  Zero counterexamples is the expected outcome everywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import CapExceeded, GeneratorSet, LengthTrace, length_trace
from .linalg import PrimeField, random_matrix
from .oracles import (
    WordSpace,
    brute_length,
    brute_min_qpt,
    enumerate_words,
    naive_profile,
)
from .powers import _lemma_flags, max_factor_exponent
from .structure import ShapeViolation, minimal_qpt, profile_shape
from .words import Alphabet, Word, complexity_profile, count_distinct_factors, factor_count


@dataclass
class SweepReport:
    name: str
    alphabet_size: int
    max_length: int
    words_checked: int
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> dict:
        return {
            "theorem": self.name,
            "words_checked": self.words_checked,
            "max_length": self.max_length,
            "alphabet_size": self.alphabet_size,
            "counterexamples": len(self.counterexamples),
        }


def merge_reports(parts: list[SweepReport]) -> SweepReport:
    """Deterministic merge of shard reports: counts add, counterexamples
    sort canonically so the result is independent of the partitioning."""
    if not parts:
        raise ValueError("nothing to merge")
    head = parts[0]
    bad = [ce for part in parts for ce in part.counterexamples]
    bad.sort(key=lambda ce: sorted(ce.items()))
    return SweepReport(
        head.name,
        head.alphabet_size,
        head.max_length,
        sum(p.words_checked for p in parts),
        bad,
    )


def sweep_mh(
    alphabet_size: int,
    max_len: int,
    budget: int | None = None,
    shard: tuple[int, int] | None = None,
) -> SweepReport:
    """Check f(n) <= n iff min decomposition cost <= n, for every word and
    every n in [1, l/2]."""
    space = _space(alphabet_size, max_len, budget)
    checked = 0
    bad: list[dict] = []
    for w in enumerate_words(space, shard):
        checked += 1
        l = len(w)
        if l < 2:
            continue
        cost = minimal_qpt(w).cost
        for n in range(1, l // 2 + 1):
            f_n = factor_count(w, n)
            if (f_n <= n) != (cost <= n):
                bad.append({"word": w.render(), "n": n, "f": f_n, "cost": cost})
    return SweepReport("mh", alphabet_size, max_len, checked, bad)


def sweep_mh_general(
    alphabet_size: int,
    max_len: int,
    budget: int | None = None,
    shard: tuple[int, int] | None = None,
) -> SweepReport:
    """Check f(n) <= m iff cost <= m over every window m <= n <= l - m, and
    that f(n) <= m forces max_i f(i) <= m."""
    space = _space(alphabet_size, max_len, budget)
    checked = 0
    bad: list[dict] = []
    for w in enumerate_words(space, shard):
        checked += 1
        l = len(w)
        if l < 2:
            continue
        cost = minimal_qpt(w).cost
        counts = naive_profile(w).counts
        peak = max(counts)
        for m in range(1, l // 2 + 1):
            rhs = cost <= m
            for n in range(m, l - m + 1):
                lhs = counts[n] <= m
                if lhs != rhs:
                    bad.append(
                        {"kind": "equivalence", "word": w.render(), "n": n, "m": m,
                         "f": counts[n], "cost": cost}
                    )
                if lhs and peak > m:
                    bad.append(
                        {"kind": "corollary", "word": w.render(), "n": n, "m": m,
                         "peak": peak}
                    )
    return SweepReport("mhgen", alphabet_size, max_len, checked, bad)


def sweep_tc(
    alphabet_size: int,
    max_len: int,
    budget: int | None = None,
    shard: tuple[int, int] | None = None,
) -> SweepReport:
    """Total-complexity lower bound, with d instantiated as each word's exact
    max exponent for every admissible k, plus the integer-d variant over
    every admissible (k, d) pair."""
    space = _space(alphabet_size, max_len, budget)
    checked = 0
    bad: list[dict] = []
    for w in enumerate_words(space, shard):
        checked += 1
        l = len(w)
        exp, _ = max_factor_exponent(w)
        counts = naive_profile(w).counts
        c = sum(counts)
        for k in range(1, l // 2 + 1):
            if l * exp.den <= k * exp.num:
                continue
            bound = (k + 1) * (l - k + 1)
            lemma1, lemma2, lemma3 = _lemma_flags(counts, l, k)
            if not (lemma1 and lemma2 and lemma3 and c >= bound):
                bad.append(
                    {"kind": "theorem", "word": w.render(), "k": k, "c": c,
                     "bound": bound, "lemmas": [lemma1, lemma2, lemma3]}
                )
        # integer-d variant: no k <= l/2 restriction
        d_min = -(-exp.num // exp.den)
        for d in range(d_min, l):
            for k in range(1, (l - 1) // d + 1):
                bound = (k + 1) * (l - k + 1)
                if c < bound:
                    bad.append(
                        {"kind": "integer", "word": w.render(), "k": k, "d": d,
                         "c": c, "bound": bound}
                    )
    return SweepReport("tc", alphabet_size, max_len, checked, bad)


def sweep_profile_shape(
    count: int,
    max_len: int,
    alphabet_sizes: tuple[int, ...] = (2, 3, 4),
    seed: int = 0,
) -> SweepReport:
    """Random words must never violate the three-phase profile shape."""
    rng = random.Random(seed)
    bad: list[dict] = []
    for _ in range(count):
        k = rng.choice(alphabet_sizes)
        l = rng.randint(1, max_len)
        w = Word(tuple(rng.randrange(k) for _ in range(l)), Alphabet.letters(k))
        try:
            profile_shape(w)
        except ShapeViolation as exc:
            bad.append({"word": w.render(), "n": exc.n, "counts": list(exc.counts)})
    return SweepReport("shape", max(alphabet_sizes), max_len, count, bad)


def cross_validate_profiles(
    count: int,
    max_len: int,
    seed: int = 0,
    alphabet_sizes: tuple[int, ...] = (2, 3, 4),
) -> SweepReport:
    """Suffix-automaton profile versus substring-set profile, exact."""
    rng = random.Random(seed)
    bad: list[dict] = []
    for _ in range(count):
        k = rng.choice(alphabet_sizes)
        l = rng.randint(1, max_len)
        w = Word(tuple(rng.randrange(k) for _ in range(l)), Alphabet.letters(k))
        fast = complexity_profile(w)
        slow = naive_profile(w)
        if fast != slow or count_distinct_factors(w) != slow.total:
            bad.append({"word": w.render(), "fast": list(fast.counts),
                        "naive": list(slow.counts)})
    return SweepReport("profiles", max(alphabet_sizes), max_len, count, bad)


def cross_validate_qpt(
    alphabet_size: int,
    max_len: int,
    random_count: int = 200,
    random_max_len: int = 30,
    seed: int = 0,
) -> SweepReport:
    """Border-array decomposition search versus the exhaustive (q, p, t) scan:
    exhaustive words up to max_len, then random longer words."""
    bad: list[dict] = []
    checked = 0
    for w in enumerate_words(WordSpace(alphabet_size, max_len)):
        checked += 1
        fast = minimal_qpt(w)
        slow = brute_min_qpt(w)
        if fast != slow:
            bad.append({"word": w.render(), "fast": str(fast), "brute": str(slow)})
    rng = random.Random(seed)
    for _ in range(random_count):
        k = rng.choice((2, 3))
        l = rng.randint(1, random_max_len)
        w = Word(tuple(rng.randrange(k) for _ in range(l)), Alphabet.letters(k))
        checked += 1
        fast = minimal_qpt(w)
        slow = brute_min_qpt(w)
        if fast != slow:
            bad.append({"word": w.render(), "fast": str(fast), "brute": str(slow)})
    return SweepReport("qpt", alphabet_size, max_len, checked, bad)


def cross_validate_length(
    count: int = 50,
    n: int = 2,
    p: int = 5,
    gens_per_set: int = 2,
    cap: int = 8,
    seed: int = 0,
) -> SweepReport:
    """Frontier-cached length trace versus the from-scratch oracle."""
    rng = random.Random(seed)
    field_ = PrimeField(p)
    bad: list[dict] = []
    checked = 0
    for _ in range(count):
        S = GeneratorSet(
            field_, n, tuple(random_matrix(field_, n, rng) for _ in range(gens_per_set))
        )
        try:
            fast = length_trace(S, max_len=cap)
            slow = brute_length(S, cap=cap)
        except CapExceeded:
            continue
        checked += 1
        if fast != slow:
            bad.append({"gens": [list(g.vectorize()) for g in S.gens],
                        "fast": str(fast), "brute": str(slow)})
    return SweepReport("length", n, cap, checked, bad)


def sample_generating_sets(
    count: int,
    dims: tuple[int, ...] = (2, 3, 4),
    primes: tuple[int, ...] = (5, 7, 11),
    gens_per_set: int = 2,
    seed: int = 0,
) -> list[tuple[GeneratorSet, LengthTrace]]:
    """Seeded random generating sets of full matrix algebras, with their
    traces; candidates that fail to generate everything are resampled."""
    rng = random.Random(seed)
    out: list[tuple[GeneratorSet, LengthTrace]] = []
    while len(out) < count:
        n = rng.choice(dims)
        p = rng.choice(primes)
        field_ = PrimeField(p)
        S = GeneratorSet(
            field_, n, tuple(random_matrix(field_, n, rng) for _ in range(gens_per_set))
        )
        trace = length_trace(S, max_len=n * n)
        if trace.generated_dim == n * n:
            out.append((S, trace))
    return out


def _space(alphabet_size: int, max_len: int, budget: int | None) -> WordSpace:
    if budget is None:
        return WordSpace(alphabet_size, max_len)
    return WordSpace(alphabet_size, max_len, budget)
