from __future__ import annotations

import random

import pytest

from immanantal import (
    IntMatrix,
    IntPolynomial,
    char_poly,
    char_poly_crt,
    char_poly_faddeev_leverrier,
    char_poly_interp,
    det,
    det_bareiss,
    det_crt,
    hadamard_bound,
    principal_minor_char_polys,
)
from immanantal.identities import RandomSpec, random_matrix

from .oracles import laplace_det, matmul


def rand_matrix(k: int, seed: int, lo: int = -9, hi: int = 9) -> IntMatrix:
    return random_matrix(RandomSpec(n=k, entry_range=(lo, hi), seed=seed))


def test_det_small_fixtures():
    assert det_bareiss(IntMatrix.from_rows([])) == 1
    assert det_bareiss(IntMatrix.from_rows([[2]])) == 2
    assert det_bareiss(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det_crt(IntMatrix.identity(5)) == 1
    assert det_crt(IntMatrix.from_rows([])) == 1
    assert det_bareiss(IntMatrix.zeros(3)) == 0


def test_det_agrees_with_laplace_oracle():
    rng = random.Random(20240101)
    for trial in range(120):
        k = rng.randrange(0, 7)
        m = rand_matrix(k, seed=trial)
        expected = laplace_det(m)
        assert det_bareiss(m) == expected
        assert det_crt(m) == expected
        assert det(m) == expected


def test_det_transpose_and_multiplicativity():
    for trial in range(40):
        m = rand_matrix(5, seed=1000 + trial)
        assert det_bareiss(m) == det_bareiss(m.transpose())
        b = rand_matrix(5, seed=2000 + trial)
        assert det_bareiss(matmul(m, b)) == det_bareiss(m) * det_bareiss(b)


def test_det_crt_large_entries():
    # entries comparable to inverse-Hilbert magnitudes; exercises multi-prime CRT
    rng = random.Random(7)
    m = IntMatrix.from_rows(
        [[rng.randint(-(10**25), 10**25) for _ in range(6)] for _ in range(6)]
    )
    assert det_crt(m) == det_bareiss(m) == laplace_det(m)


def test_det_dispatch_threshold():
    m = rand_matrix(10, seed=5)
    assert det(m, crt_threshold=4) == det(m, crt_threshold=64) == det_bareiss(m)


def test_hadamard_bound_dominates():
    for trial in range(30):
        k = trial % 6
        m = rand_matrix(k, seed=300 + trial)
        assert abs(det_bareiss(m)) <= hadamard_bound(m) or hadamard_bound(m) == 0
        if hadamard_bound(m) == 0:
            assert det_bareiss(m) == 0


def test_char_poly_fixtures():
    swap = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert char_poly(swap) == IntPolynomial.from_coeffs([-1, 0, 1])  # x^2 - 1
    assert char_poly(IntMatrix.zeros(3)) == IntPolynomial.from_coeffs([0, 0, 0, 1])  # x^3
    assert char_poly(IntMatrix.from_rows([])) == IntPolynomial.from_coeffs([1])
    assert char_poly(IntMatrix.from_rows([[5]])) == IntPolynomial.from_coeffs([-5, 1])


def test_char_poly_evaluation_consistency():
    rng = random.Random(99)
    for trial in range(15):
        k = rng.randrange(0, 8)
        m = rand_matrix(k, seed=4000 + trial)
        p = char_poly(m)
        for t in range(-3, 4):
            shifted = IntMatrix.from_rows(
                [
                    [(t if i == j else 0) - m.rows[i][j] for j in range(k)]
                    for i in range(k)
                ]
            )
            assert p.evaluate(t) == laplace_det(shifted)


def test_char_poly_paths_agree():
    rng = random.Random(31337)
    for trial in range(60):
        k = rng.randrange(0, 9)
        m = rand_matrix(k, seed=5000 + trial, lo=-20, hi=20)
        a = char_poly_interp(m)
        b = char_poly_faddeev_leverrier(m)
        c = char_poly_crt(m)
        assert a == b == c
        assert a.degree() == k
        assert a.leading_coefficient() == 1
        if k >= 1:
            assert a.coefficient(k - 1) == -m.trace()


def test_char_poly_paths_agree_medium_size():
    m = rand_matrix(30, seed=8, lo=-3, hi=3)
    assert char_poly_interp(m) == char_poly_crt(m) == char_poly_faddeev_leverrier(m)


def test_char_poly_strategy_dispatch():
    m = rand_matrix(6, seed=77)
    for strategy in ("auto", "interp", "faddeev-leverrier", "crt"):
        assert char_poly(m, strategy=strategy) == char_poly_interp(m)
    with pytest.raises(ValueError):
        char_poly(m, strategy="quantum")


def test_principal_minor_char_polys():
    swap = IntMatrix.from_rows([[0, 1], [1, 0]])
    x = IntPolynomial.from_coeffs([0, 1])
    assert principal_minor_char_polys(swap) == [x, x]
    p3 = IntMatrix.from_rows([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    xx_minus_1 = IntPolynomial.from_coeffs([-1, 0, 1])
    xx = IntPolynomial.from_coeffs([0, 0, 1])
    assert principal_minor_char_polys(p3) == [xx_minus_1, xx, xx_minus_1]
    assert principal_minor_char_polys(IntMatrix.from_rows([])) == []
    for entry in principal_minor_char_polys(rand_matrix(5, seed=6)):
        assert entry.degree() == 4
        assert entry.leading_coefficient() == 1


def test_workers_do_not_change_results():
    m = rand_matrix(12, seed=123)
    assert det_crt(m, workers=1) == det_crt(m, workers=8)
    assert char_poly_interp(m, workers=8) == char_poly_interp(m, workers=1)
    assert char_poly_crt(m, workers=8) == char_poly_crt(m, workers=1)
