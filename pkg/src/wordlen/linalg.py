"""Exact dense linear algebra over prime fields GF(p).

Everything is plain machine-integer arithmetic mod p with p < 2^31, so all
intermediate products fit in 64 bits.  Matrices vectorize row-major; span
bases are kept in reduced row-echelon form with the pivot at the lowest
nonzero column.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence


class DivisionByZero(ZeroDivisionError):
    """Inverse of zero requested in GF(p)."""


class DimensionMismatch(ValueError):
    """Operands have incompatible dimensions or fields."""


class NoShiftFound(RuntimeError):
    """The shift scan exhausted the field; impossible when p > deg(mu)."""


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for a prime 2 <= p < 2^31, primality checked by trial division."""

    p: int

    def __post_init__(self) -> None:
        p = self.p
        if not 2 <= p < 2**31:
            raise ValueError(f"modulus {p} outside [2, 2^31)")
        if p % 2 == 0 and p != 2:
            raise ValueError(f"{p} is not prime")
        d = 3
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
            d += 2

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise DivisionByZero("inverse of 0 in GF(p)")
        return pow(x, self.p - 2, self.p)


def field_inv(x: int, field: PrimeField) -> int:
    """Multiplicative inverse of x mod p."""
    return field.inv(x)


@dataclass(frozen=True)
class FMatrix:
    """Dense n x n matrix over a prime field; entries always reduced mod p."""

    field: PrimeField
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n, p = self.n, self.field.p
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise DimensionMismatch(f"entries are not {n}x{n}")
        for row in self.entries:
            for x in row:
                if not 0 <= x < p:
                    raise ValueError("entries must be reduced residues")

    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]]) -> "FMatrix":
        p = field.p
        return cls(field, len(rows), tuple(tuple(x % p for x in row) for row in rows))

    @classmethod
    def from_flat(cls, field: PrimeField, n: int, values: Sequence[int]) -> "FMatrix":
        if len(values) != n * n:
            raise DimensionMismatch(f"expected {n * n} entries, got {len(values)}")
        p = field.p
        rows = tuple(
            tuple(values[i * n + j] % p for j in range(n)) for i in range(n)
        )
        return cls(field, n, rows)

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "FMatrix":
        return cls(field, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, field: PrimeField, n: int) -> "FMatrix":
        return cls(field, n, tuple((0,) * n for _ in range(n)))

    def _check_compatible(self, other: "FMatrix") -> None:
        if self.field != other.field or self.n != other.n:
            raise DimensionMismatch("matrices from different spaces")

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        self._check_compatible(other)
        p = self.field.p
        cols = tuple(zip(*other.entries))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
            for row in self.entries
        )
        return FMatrix(self.field, self.n, rows)

    def __add__(self, other: "FMatrix") -> "FMatrix":
        self._check_compatible(other)
        p = self.field.p
        rows = tuple(
            tuple((a + b) % p for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        )
        return FMatrix(self.field, self.n, rows)

    def scale(self, c: int) -> "FMatrix":
        p = self.field.p
        c %= p
        return FMatrix(
            self.field, self.n, tuple(tuple(c * x % p for x in row) for row in self.entries)
        )

    def vectorize(self) -> tuple[int, ...]:
        """Row-major flattening, the coordinate convention for span bases."""
        return tuple(x for row in self.entries for x in row)


class SpanBasis:
    """Incrementally built reduced row-echelon basis of a vector span.

    Single-writer: concurrent reads are fine between inserts.
    """

    def __init__(self, ambient_dim: int, field: PrimeField) -> None:
        self.ambient_dim = ambient_dim
        self.field = field
        self._rows: dict[int, list[int]] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(row) for _, row in sorted(self._rows.items())]

    def copy(self) -> "SpanBasis":
        dup = SpanBasis(self.ambient_dim, self.field)
        dup._rows = {col: row[:] for col, row in self._rows.items()}
        return dup

    def _reduced(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector length {len(vec)} != ambient {self.ambient_dim}"
            )
        p = self.field.p
        v = [x % p for x in vec]
        for col, row in self._rows.items():
            c = v[col]
            if c:
                for j in range(col, self.ambient_dim):
                    v[j] = (v[j] - c * row[j]) % p
        return v

    def insert(self, vec: Sequence[int]) -> bool:
        """Add vec to the span; True iff it was independent."""
        v = self._reduced(vec)
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        p = self.field.p
        inv = pow(v[pivot], p - 2, p)
        v = [x * inv % p for x in v]
        for row in self._rows.values():
            c = row[pivot]
            if c:
                for j in range(pivot, self.ambient_dim):
                    row[j] = (row[j] - c * v[j]) % p
        self._rows[pivot] = v
        return True

    def contains(self, vec: Sequence[int]) -> bool:
        return not any(self._reduced(vec))


def insert_into_span(basis: SpanBasis, m: FMatrix) -> bool:
    """Insert a vectorized matrix; True iff the basis grew."""
    if m.n * m.n != basis.ambient_dim:
        raise DimensionMismatch(
            f"matrix is {m.n}x{m.n}, ambient dimension is {basis.ambient_dim}"
        )
    if m.field != basis.field:
        raise DimensionMismatch("matrix and basis use different fields")
    return basis.insert(m.vectorize())


@dataclass(frozen=True)
class MinPoly:
    """Monic minimal polynomial; coeffs[i] multiplies t^i."""

    coeffs: tuple[int, ...]
    field: PrimeField

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate_scalar(self, x: int) -> int:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def evaluate(self, a: FMatrix) -> FMatrix:
        return _poly_at(self.coeffs, a)


def _poly_at(coeffs: Sequence[int], a: FMatrix) -> FMatrix:
    ident = FMatrix.identity(a.field, a.n)
    acc = FMatrix.zero(a.field, a.n)
    for c in reversed(coeffs):
        acc = acc @ a + ident.scale(c)
    return acc


def min_poly(a: FMatrix) -> MinPoly:
    """Least-degree monic polynomial annihilating a.

    Powers of a are inserted into a span with their combination over earlier
    powers tracked; the first dependence is the minimal polynomial.
    """
    p = a.field.p
    dim = a.n * a.n
    rows: dict[int, tuple[list[int], list[int]]] = {}
    power = FMatrix.identity(a.field, a.n)
    k = 0
    while True:
        v = list(power.vectorize())
        combo = [0] * (k + 1)
        combo[k] = 1
        for col, (row, row_combo) in rows.items():
            c = v[col]
            if c:
                for j in range(col, dim):
                    v[j] = (v[j] - c * row[j]) % p
                for j in range(len(row_combo)):
                    combo[j] = (combo[j] - c * row_combo[j]) % p
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is None:
            return MinPoly(tuple(combo), a.field)
        inv = pow(v[pivot], p - 2, p)
        rows[pivot] = ([x * inv % p for x in v], [x * inv % p for x in combo])
        power = power @ a
        k += 1


@dataclass(frozen=True)
class ShiftResult:
    """Shift lambda, the inverse of (x + lambda*I), and the certificate
    polynomial in x that evaluates to that inverse."""

    lam: int
    inverse: FMatrix
    cert_coeffs: tuple[int, ...]
    cert_degree: int


def shift_to_invertible(x: FMatrix) -> ShiftResult:
    """First lambda = 0, 1, 2, ... making x + lambda*I invertible.

    Requires p > deg(mu_x), which guarantees some lambda with mu(-lambda)
    nonzero.  The inverse comes from dividing mu(t) - mu(-lambda) by
    (t + lambda), so it is a polynomial in x of degree deg(mu) - 1.
    """
    mu = min_poly(x)
    m = mu.degree
    p = x.field.p
    if p <= m:
        raise ValueError(f"need field size > {m}, the minimal polynomial degree")
    for lam in range(p):
        c = mu.evaluate_scalar((-lam) % p)
        if c == 0:
            continue
        h = list(mu.coeffs)
        h[0] = (h[0] - c) % p
        root = (-lam) % p
        g = [0] * m
        g[m - 1] = h[m]
        for j in range(m - 1, 0, -1):
            g[j - 1] = (h[j] + root * g[j]) % p
        neg_c_inv = (-pow(c, p - 2, p)) % p
        cert = tuple(coef * neg_c_inv % p for coef in g)
        inverse = _poly_at(cert, x)
        return ShiftResult(lam, inverse, cert, len(cert) - 1)
    raise NoShiftFound("scan exhausted GF(p); precondition p > deg(mu) violated?")


def random_matrix(field: PrimeField, n: int, rng: random.Random) -> FMatrix:
    """Uniformly random n x n matrix over GF(p)."""
    return FMatrix(
        field, n, tuple(tuple(rng.randrange(field.p) for _ in range(n)) for _ in range(n))
    )


def load_matrix_set(source: str | Path | Mapping) -> tuple[PrimeField, int, list[FMatrix]]:
    """Read the matrix JSON format {"p": prime, "n": dim, "matrices": [[...]]}.

    Each matrix is one flat row-major integer list; entries are reduced
    mod p on load.
    """
    if isinstance(source, (str, Path)):
        data = json.loads(Path(source).read_text())
    else:
        data = source
    field = PrimeField(int(data["p"]))
    n = int(data["n"])
    mats = [FMatrix.from_flat(field, n, [int(x) for x in flat]) for flat in data["matrices"]]
    return field, n, mats


def dump_matrix_set(field: PrimeField, n: int, matrices: Sequence[FMatrix]) -> dict:
    """Inverse of load_matrix_set, producing the documented JSON schema."""
    return {
        "p": field.p,
        "n": n,
        "matrices": [list(m.vectorize()) for m in matrices],
    }
