"""Exact determinants and characteristic polynomials of integer matrices.

Two determinant strategies are provided and cross-checked:

* ``det_bareiss`` -- fraction-free elimination; every intermediate value is a
  minor of the input, so all divisions are exact. Best at small sizes.
* ``det_crt`` -- determinants modulo a fixed descending sequence of 25-bit
  primes, recombined by the Chinese remainder theorem with a symmetric lift.
  The prime product is sized from the Hadamard bound, so the lift is exact.

``det`` switches between them at a configurable size threshold.

Characteristic polynomials come in three independently implemented flavours:
evaluation at the integer grid 0..k followed by exact Newton interpolation
(the reference path, reusing the determinant kernels), a division-exact
trace-recurrence path, and a modular Hessenberg path recombined by CRT (the
fast path for large matrices). They agree on every input; the test suite
enforces this.
"""

from __future__ import annotations

import math

import numpy as np

from .matrix import IntMatrix
from .parallel import pmap
from .poly import IntPolynomial
from .primes import crt_combine, primes_for_bound, symmetric_lift

DEFAULT_CRT_THRESHOLD = 64
DEFAULT_CHARPOLY_INTERP_MAX = 24

# int64 dot products of residues stay exact while n * (p-1)^2 < 2**63.
_MAX_MODULAR_SIZE = 8192

_crt_threshold_override: int | None = None


def set_default_crt_threshold(value: int | None) -> None:
    """Process-wide override for the Bareiss/CRT switch (None restores the default).

    Explicit ``crt_threshold`` arguments still win; this only changes what a
    bare ``det(m)`` call uses. The CLI exposes it as --crt-threshold.
    """
    global _crt_threshold_override
    _crt_threshold_override = value


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Gaussian elimination.

    The 0x0 determinant is 1 (empty product), which the deck identities at
    the small-graph boundary depend on.
    """
    k = m.k
    if k == 0:
        return 1
    if k == 1:
        return m.rows[0][0]
    a = m.to_lists()
    sign = 1
    prev = 1
    for col in range(k - 1):
        if a[col][col] == 0:
            for r in range(col + 1, k):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = a[col]
        pivot = pivot_row[col]
        for i in range(col + 1, k):
            row = a[i]
            head = row[col]
            if head == 0:
                if pivot != prev:
                    row[col + 1 :] = [v * pivot // prev for v in row[col + 1 :]]
            else:
                row[col + 1 :] = [
                    (v * pivot - head * w) // prev
                    for v, w in zip(row[col + 1 :], pivot_row[col + 1 :])
                ]
                row[col] = 0
        prev = pivot
    return sign * a[k - 1][k - 1]


def hadamard_bound(m: IntMatrix) -> int:
    """Integer upper bound on |det(m)| (product of row 2-norms, rounded up)."""
    bound = 1
    for row in m.rows:
        sq = sum(v * v for v in row)
        if sq == 0:
            return 0
        bound *= math.isqrt(sq) + 1
    return bound


def _charpoly_coeff_bound(m: IntMatrix) -> int:
    # Each coefficient is a signed sum of at most C(k,j) <= 2**k principal
    # minors, each bounded by the product of full row norms.
    bound = 1
    for row in m.rows:
        sq = sum(v * v for v in row)
        bound *= max(1, math.isqrt(sq) + 1)
    return bound << m.k


def _residue_maker(m: IntMatrix):
    """Return a function p -> int64 ndarray of entries reduced mod p."""
    if m.k > _MAX_MODULAR_SIZE:
        raise ValueError(f"matrix size {m.k} exceeds modular kernel limit {_MAX_MODULAR_SIZE}")
    if m.max_abs_entry() < (1 << 62):
        base = np.array(m.to_lists(), dtype=np.int64).reshape(m.k, m.k)
        return lambda p: base % p
    rows = m.rows

    def reduce_big(p: int) -> np.ndarray:
        return np.array([[v % p for v in row] for row in rows], dtype=np.int64).reshape(
            m.k, m.k
        )

    return reduce_big


def _det_mod(a: np.ndarray, p: int) -> int:
    """Determinant of an int64 residue matrix mod p, by Gaussian elimination."""
    n = a.shape[0]
    if n == 0:
        return 1
    a = a.copy()
    det = 1
    for c in range(n):
        nz = np.flatnonzero(a[c:, c])
        if nz.size == 0:
            return 0
        r = c + int(nz[0])
        if r != c:
            a[[c, r], c:] = a[[r, c], c:]
            det = -det
        pivot = int(a[c, c])
        det = det * pivot % p
        if c + 1 < n:
            f = a[c + 1 :, c] * pow(pivot, -1, p) % p
            a[c + 1 :, c + 1 :] = (a[c + 1 :, c + 1 :] - f[:, None] * a[c, c + 1 :]) % p
    return det % p


def det_crt(m: IntMatrix, workers: int | None = None) -> int:
    """Exact determinant via modular determinants and CRT recombination."""
    if m.k == 0:
        return 1
    bound = hadamard_bound(m)
    if bound == 0:
        return 0
    primes = primes_for_bound(2 * bound)
    make = _residue_maker(m)
    residues = pmap(lambda p: _det_mod(make(p), p), primes, workers)
    modulus = math.prod(primes)
    return symmetric_lift(crt_combine(residues, primes), modulus)


def det(m: IntMatrix, crt_threshold: int | None = None, workers: int | None = None) -> int:
    """Exact determinant; Bareiss up to ``crt_threshold``, CRT above."""
    if crt_threshold is None:
        crt_threshold = (
            DEFAULT_CRT_THRESHOLD if _crt_threshold_override is None else _crt_threshold_override
        )
    if m.k <= crt_threshold:
        return det_bareiss(m)
    return det_crt(m, workers)


def _x_shift(m: IntMatrix, t: int) -> IntMatrix:
    """The matrix t*I - m."""
    return IntMatrix(
        tuple(
            tuple((t - v) if i == j else -v for j, v in enumerate(row))
            for i, row in enumerate(m.rows)
        )
    )


def char_poly_interp(
    m: IntMatrix, crt_threshold: int | None = None, workers: int | None = None
) -> IntPolynomial:
    """det(x*I - m) by evaluation at x = 0..k and exact Newton interpolation.

    The values come from an integer polynomial sampled on consecutive
    integers, so every divided difference is an integer and every division
    below is exact.
    """
    k = m.k
    if k == 0:
        return IntPolynomial((1,))
    vals = pmap(lambda t: det(_x_shift(m, t), crt_threshold), range(k + 1), workers)
    dd = list(vals)
    for j in range(1, k + 1):
        for i in range(k, j - 1, -1):
            num = dd[i] - dd[i - 1]
            q, r = divmod(num, j)
            if r:
                raise ArithmeticError("inexact divided difference; determinant kernel bug")
            dd[i] = q
    # Newton form on nodes 0..k, expanded by Horner: p = (...((c_k)(x-(k-1)) + c_{k-1})...)
    poly = IntPolynomial.from_coeffs((dd[k],))
    for i in range(k - 1, -1, -1):
        poly = poly.shift_mul_x() - poly.scale(i) + IntPolynomial.constant(dd[i])
    return poly


def char_poly_faddeev_leverrier(m: IntMatrix) -> IntPolynomial:
    """det(x*I - m) by the trace recurrence with exact integer divisions."""
    k = m.k
    if k == 0:
        return IntPolynomial((1,))
    a = m.to_lists()
    b = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    coeffs_desc = [1]
    for step in range(1, k + 1):
        ab = [
            [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
        tr = sum(ab[i][i] for i in range(k))
        q, r = divmod(-tr, step)
        if r:
            raise ArithmeticError("inexact trace division; recurrence bug")
        coeffs_desc.append(q)
        if step < k:
            b = ab
            for i in range(k):
                b[i][i] += q
    return IntPolynomial.from_coeffs(reversed(coeffs_desc))


def _charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Coefficients of det(x*I - a) mod p, ascending, length n+1.

    Reduces to upper Hessenberg form by similarity transforms, then expands
    leading principal characteristic polynomials along the last column.
    """
    h = a.copy()
    n = h.shape[0]
    for c in range(n - 2):
        nz = np.flatnonzero(h[c + 1 :, c])
        if nz.size == 0:
            continue
        r = c + 1 + int(nz[0])
        if r != c + 1:
            h[[c + 1, r], :] = h[[r, c + 1], :]
            h[:, [c + 1, r]] = h[:, [r, c + 1]]
        f = h[c + 2 :, c] * pow(int(h[c + 1, c]), -1, p) % p
        h[c + 2 :, c:] = (h[c + 2 :, c:] - f[:, None] * h[c + 1, c:]) % p
        h[:, c + 1] = (h[:, c + 1] + h[:, c + 2 :] @ f) % p
    charpolys = np.zeros((n + 1, n + 1), dtype=np.int64)
    charpolys[0, 0] = 1
    for k in range(1, n + 1):
        prev = charpolys[k - 1, 0:k]
        charpolys[k, 1 : k + 1] = prev
        charpolys[k, 0:k] = (charpolys[k, 0:k] - int(h[k - 1, k - 1]) * prev) % p
        if k >= 2:
            # weights h[i, k-1] * prod of the subdiagonal run below row i
            subdiag = h[np.arange(1, k), np.arange(0, k - 1)]
            prods = np.ones(k - 1, dtype=np.int64)
            acc = 1
            for t in range(k - 2, -1, -1):
                acc = acc * int(subdiag[t]) % p
                prods[t] = acc
            w = h[0 : k - 1, k - 1] * prods % p
            charpolys[k, 0:k] = (charpolys[k, 0:k] - w @ charpolys[0 : k - 1, 0:k]) % p
    return charpolys[n] % p


def char_poly_crt(m: IntMatrix, workers: int | None = None) -> IntPolynomial:
    """det(x*I - m) via per-prime Hessenberg reduction and CRT recombination."""
    k = m.k
    if k == 0:
        return IntPolynomial((1,))
    bound = _charpoly_coeff_bound(m)
    primes = primes_for_bound(2 * bound)
    make = _residue_maker(m)
    residue_polys = pmap(lambda p: _charpoly_mod(make(p), p), primes, workers)
    modulus = math.prod(primes)
    coeffs = []
    for j in range(k + 1):
        residues = [int(rp[j]) for rp in residue_polys]
        coeffs.append(symmetric_lift(crt_combine(residues, primes), modulus))
    return IntPolynomial.from_coeffs(coeffs)


def char_poly(
    m: IntMatrix,
    strategy: str = "auto",
    crt_threshold: int | None = None,
    workers: int | None = None,
) -> IntPolynomial:
    """Exact characteristic polynomial det(x*I - m).

    Monic of degree k; the 0x0 matrix yields the constant polynomial 1.
    ``strategy`` is one of auto, interp, faddeev-leverrier, crt.
    """
    if strategy == "auto":
        strategy = "interp" if m.k <= DEFAULT_CHARPOLY_INTERP_MAX else "crt"
    if strategy == "interp":
        return char_poly_interp(m, crt_threshold, workers)
    if strategy == "faddeev-leverrier":
        return char_poly_faddeev_leverrier(m)
    if strategy == "crt":
        return char_poly_crt(m, workers)
    raise ValueError(f"unknown char_poly strategy {strategy!r}")


def principal_minor_char_polys(
    m: IntMatrix, workers: int | None = None
) -> list[IntPolynomial]:
    """Characteristic polynomial of every one-row-one-column principal minor."""
    return pmap(lambda i: char_poly(m.principal_minor(i)), range(m.k), workers)
