"""Independent test-side oracles.

These deliberately avoid the library's elimination/CRT kernels: the
determinant oracle is a memoized Laplace cofactor expansion, usable up to
size 8 or so. Anything checked against it is checked against a second,
structurally different computation.
"""

from __future__ import annotations

from immanantal import IntMatrix


def laplace_det(m: IntMatrix) -> int:
    """Cofactor expansion along successive rows, memoized on column sets."""
    rows = m.rows
    k = m.k
    memo: dict[tuple[int, ...], int] = {(): 1}

    def expand(cols: tuple[int, ...]) -> int:
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = k - len(cols)
        total = 0
        for t, c in enumerate(cols):
            v = rows[r][c]
            if v:
                sub = expand(cols[:t] + cols[t + 1 :])
                total += v * sub if t % 2 == 0 else -v * sub
        memo[cols] = total
        return total

    return expand(tuple(range(k)))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    k = a.k
    return IntMatrix.from_rows(
        [[sum(a.rows[i][t] * b.rows[t][j] for t in range(k)) for j in range(k)] for i in range(k)]
    )
