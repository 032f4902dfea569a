"""Closed-form upper bounds on the length of a generating set or algebra.

All values are exact: rationals are fractions.Fraction, and the one bound
containing a square root is compared to rationals by isolating the radical
and squaring, never through floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class InvalidInputs(ValueError):
    """Bound parameters outside their stated domain."""


def _ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r + (r * r < x)


def paz_bound(n: int) -> int:
    """ceil((n^2 + 2) / 3) for the n x n matrix algebra."""
    if n < 1:
        raise InvalidInputs(f"matrix size must be >= 1, got {n}")
    return -(-(n * n + 2) // 3)


def main_bound(d: int, m: int, k: int) -> Fraction:
    """max(k(m-1), d/(k+1) + k - 1) for dimension d and max min-poly degree m."""
    if m < 2 or d < m or k < 0:
        raise InvalidInputs(f"need m >= 2, d >= m, k >= 0; got d={d}, m={m}, k={k}")
    return max(Fraction(k * (m - 1)), Fraction(d, k + 1) + k - 1)


def halfdim_bound(d: int, m: int) -> Fraction:
    """max(m - 1, d/2); coincides with main_bound at k = 1."""
    if m < 2 or d < 1:
        raise InvalidInputs(f"need m >= 2, d >= 1; got d={d}, m={m}")
    return max(Fraction(m - 1), Fraction(d, 2))


@dataclass(frozen=True)
class BestMain:
    k_star: int
    value: Fraction
    integer_value: int


def best_main_bound(d: int, m: int) -> BestMain:
    """Minimize main_bound over k in [0, ceil(sqrt(d)) + m].

    Beyond the cap the k(m-1) branch alone exceeds the value at
    k = floor(sqrt(d/m)), so the minimum cannot move.  Lengths are integers,
    hence the floor is reported alongside the exact value.
    """
    if m < 2 or d < m:
        raise InvalidInputs(f"need m >= 2, d >= m; got d={d}, m={m}")
    k_cap = _ceil_sqrt(d) + m
    k_star, value = 0, main_bound(d, m, 0)
    for k in range(1, k_cap + 1):
        v = main_bound(d, m, k)
        if v < value:
            k_star, value = k, v
    return BestMain(k_star, value, value.numerator // value.denominator)


def floor_sqrt_ratio(d: int, m: int) -> int:
    """floor(sqrt(d/m)) computed exactly: isqrt(d // m)."""
    if m < 1 or d < 0:
        raise InvalidInputs(f"need m >= 1, d >= 0; got d={d}, m={m}")
    return math.isqrt(d // m)


@dataclass(frozen=True)
class PappacenaBound:
    """Handle on m*sqrt(2d/(m-1) + 1/4) + m/2 - 2 with exact comparisons."""

    d: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.d < self.m:
            raise InvalidInputs(f"need m >= 2, d >= m; got d={self.d}, m={self.m}")

    @property
    def radicand(self) -> Fraction:
        return Fraction(2 * self.d, self.m - 1) + Fraction(1, 4)

    def approx(self) -> float:
        return self.m * math.sqrt(float(self.radicand)) + self.m / 2 - 2

    def greater_than(self, r: Fraction | int) -> bool:
        """Is the bound strictly greater than the rational r?

        r < m*sqrt(R) + m/2 - 2 iff r - m/2 + 2 < m*sqrt(R); the left side
        is rational, so one sign check plus one squaring decides it with
        integer arithmetic only.
        """
        lhs = Fraction(r) - Fraction(self.m, 2) + 2
        if lhs < 0:
            return True
        return lhs * lhs < self.m * self.m * self.radicand


def pappacena_bound(d: int, m: int) -> PappacenaBound:
    return PappacenaBound(d, m)


def pappacena_exceeds_main(d: int, m: int) -> bool:
    """Is the square-root bound strictly above the max-form bound evaluated
    at k = floor(sqrt(d/m))?  Compared exactly."""
    k = floor_sqrt_ratio(d, m)
    return pappacena_bound(d, m).greater_than(main_bound(d, m, k))


@dataclass(frozen=True)
class BoundReport:
    """Every closed-form bound for one (d, m[, n]) instance."""

    d: int
    m: int
    n: int | None
    trivial: int
    halfdim: Fraction
    paz: int | None
    pappacena: PappacenaBound
    main_at_k: tuple[tuple[int, Fraction], ...]
    best_main: BestMain


def bound_table(d: int, m: int, n: int | None = None) -> BoundReport:
    """Evaluate every bound; internal consistency is asserted, not assumed."""
    if m < 2 or d < m:
        raise InvalidInputs(f"need m >= 2, d >= m; got d={d}, m={m}")
    if n is not None and n < 1:
        raise InvalidInputs(f"matrix size must be >= 1, got {n}")
    trivial = d - 1
    k_cap = _ceil_sqrt(d) + m
    main_at_k = tuple((k, main_bound(d, m, k)) for k in range(k_cap + 1))
    best = best_main_bound(d, m)
    assert all(best.value <= v for _, v in main_at_k)
    assert best.value <= trivial
    return BoundReport(
        d=d,
        m=m,
        n=n,
        trivial=trivial,
        halfdim=halfdim_bound(d, m),
        paz=paz_bound(n) if n is not None else None,
        pappacena=pappacena_bound(d, m),
        main_at_k=main_at_k,
        best_main=best,
    )
