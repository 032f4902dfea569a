from __future__ import annotations

import random

import pytest

from wordlen.linalg import (
    DimensionMismatch,
    DivisionByZero,
    FMatrix,
    PrimeField,
    SpanBasis,
    dump_matrix_set,
    field_inv,
    insert_into_span,
    load_matrix_set,
    min_poly,
    shift_to_invertible,
)

F5 = PrimeField(5)
F7 = PrimeField(7)


def E(field, n, i, j):
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    return FMatrix.from_rows(field, rows)


class TestPrimeField:
    def test_accepts_primes(self):
        for p in (2, 3, 5, 7, 11, 104729):
            PrimeField(p)

    def test_rejects_composites_and_range(self):
        for p in (1, 4, 9, 15, 2**31):
            with pytest.raises(ValueError):
                PrimeField(p)

    def test_inverse(self):
        assert field_inv(2, F5) == 3
        assert field_inv(1, F7) == 1
        assert field_inv(4, F7) == 2

    def test_inverse_of_zero(self):
        with pytest.raises(DivisionByZero):
            field_inv(0, F5)
        with pytest.raises(DivisionByZero):
            field_inv(10, F5)


class TestFMatrix:
    def test_from_rows_reduces(self):
        m = FMatrix.from_rows(F5, [[7, -1], [5, 3]])
        assert m.entries == ((2, 4), (0, 3))

    def test_matmul(self):
        assert E(F5, 2, 0, 1) @ E(F5, 2, 1, 0) == E(F5, 2, 0, 0)

    def test_add_scale(self):
        ident = FMatrix.identity(F5, 2)
        m = ident.scale(3) + ident.scale(4)
        assert m == ident.scale(2)

    def test_incompatible(self):
        with pytest.raises(DimensionMismatch):
            FMatrix.identity(F5, 2) @ FMatrix.identity(F5, 3)
        with pytest.raises(DimensionMismatch):
            FMatrix.identity(F5, 2) @ FMatrix.identity(F7, 2)

    def test_vectorize_row_major(self):
        m = FMatrix.from_rows(F5, [[1, 2], [3, 4]])
        assert m.vectorize() == (1, 2, 3, 4)


class TestSpanBasis:
    def test_grows_on_independent(self):
        basis = SpanBasis(4, F5)
        assert insert_into_span(basis, FMatrix.identity(F5, 2))
        assert basis.dim == 1

    def test_scalar_multiple_dependent(self):
        basis = SpanBasis(4, F5)
        ident = FMatrix.identity(F5, 2)
        insert_into_span(basis, ident)
        assert not insert_into_span(basis, ident.scale(2))

    def test_matrix_units_independent(self):
        basis = SpanBasis(4, F5)
        insert_into_span(basis, FMatrix.identity(F5, 2))
        insert_into_span(basis, E(F5, 2, 0, 1))
        assert insert_into_span(basis, E(F5, 2, 1, 0))
        assert basis.dim == 3

    def test_idempotent(self):
        basis = SpanBasis(4, F5)
        m = E(F5, 2, 0, 1)
        assert insert_into_span(basis, m)
        assert not insert_into_span(basis, m)
        assert basis.dim == 1

    def test_all_units_reach_full_dimension(self):
        for k in (2, 3):
            basis = SpanBasis(k * k, F5)
            for i in range(k):
                for j in range(k):
                    insert_into_span(basis, E(F5, k, i, j))
            assert basis.dim == k * k

    def test_rows_are_reduced_echelon(self):
        rng = random.Random(3)
        basis = SpanBasis(9, F7)
        for _ in range(20):
            basis.insert([rng.randrange(7) for _ in range(9)])
        rows = basis.rows
        pivots = []
        for row in rows:
            piv = next(i for i, x in enumerate(row) if x)
            assert row[piv] == 1
            pivots.append(piv)
        assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
        for row in rows:
            for other_piv in pivots:
                piv = next(i for i, x in enumerate(row) if x)
                if other_piv != piv:
                    assert row[other_piv] == 0

    def test_dimension_mismatch(self):
        basis = SpanBasis(4, F5)
        with pytest.raises(DimensionMismatch):
            basis.insert([1, 2, 3])
        with pytest.raises(DimensionMismatch):
            insert_into_span(basis, FMatrix.identity(F5, 3))


class TestMinPoly:
    def test_nilpotent(self):
        mu = min_poly(E(F5, 2, 0, 1))
        assert mu.coeffs == (0, 0, 1)  # t^2
        assert mu.degree == 2

    def test_identity(self):
        mu = min_poly(FMatrix.identity(F5, 3))
        assert mu.coeffs == (4, 1)  # t - 1
        assert mu.degree == 1

    def test_diagonal(self):
        mu = min_poly(FMatrix.from_rows(F5, [[1, 0], [0, 2]]))
        assert mu.coeffs == (2, 2, 1)  # (t-1)(t-2) mod 5
        assert mu.degree == 2

    def test_zero_matrix(self):
        mu = min_poly(FMatrix.zero(F5, 2))
        assert mu.coeffs == (0, 1)  # t

    def test_annihilates_and_minimal(self):
        from wordlen.linalg import random_matrix

        rng = random.Random(17)
        for _ in range(50):
            n = rng.choice((2, 3, 4))
            p = rng.choice((5, 7, 11))
            field = PrimeField(p)
            a = random_matrix(field, n, rng)
            mu = min_poly(a)
            assert mu.degree <= n  # Cayley-Hamilton ceiling
            assert mu.coeffs[-1] == 1
            assert mu.evaluate(a) == FMatrix.zero(field, n)
            # powers below the degree are independent, so no shorter monic works
            basis = SpanBasis(n * n, field)
            power = FMatrix.identity(field, n)
            for _ in range(mu.degree):
                assert basis.insert(power.vectorize())
                power = power @ a


class TestShiftToInvertible:
    def test_nilpotent_example(self):
        res = shift_to_invertible(E(F5, 2, 0, 1))
        assert res.lam == 1
        assert res.inverse == FMatrix.from_rows(F5, [[1, -1], [0, 1]])
        assert res.cert_degree == 1

    def test_identity_example(self):
        ident = FMatrix.identity(F5, 2)
        res = shift_to_invertible(ident)
        assert res.lam == 0
        assert res.inverse == ident
        assert res.cert_degree == 0

    def test_random_product_and_certificate(self):
        from wordlen.linalg import _poly_at, random_matrix

        rng = random.Random(23)
        for _ in range(60):
            n = rng.choice((2, 3))
            field = PrimeField(rng.choice((5, 7)))
            x = random_matrix(field, n, rng)
            res = shift_to_invertible(x)
            shifted = x + FMatrix.identity(field, n).scale(res.lam)
            assert res.inverse @ shifted == FMatrix.identity(field, n)
            assert shifted @ res.inverse == FMatrix.identity(field, n)
            assert _poly_at(res.cert_coeffs, x) == res.inverse
            assert res.cert_degree <= min_poly(x).degree - 1

    def test_small_field_rejected(self):
        f2 = PrimeField(2)
        with pytest.raises(ValueError):
            shift_to_invertible(E(f2, 2, 0, 1))  # deg mu = 2 >= p


class TestMatrixJson:
    def test_round_trip(self, tmp_path):
        import json

        mats = [E(F5, 2, 0, 1), E(F5, 2, 1, 0)]
        payload = dump_matrix_set(F5, 2, mats)
        path = tmp_path / "set.json"
        path.write_text(json.dumps(payload))
        field, n, loaded = load_matrix_set(path)
        assert field == F5 and n == 2 and loaded == mats
        assert dump_matrix_set(field, n, loaded) == payload

    def test_load_reduces_mod_p(self):
        field, n, mats = load_matrix_set(
            {"p": 5, "n": 2, "matrices": [[6, -1, 0, 10]]}
        )
        assert mats[0].entries == ((1, 4), (0, 0))
