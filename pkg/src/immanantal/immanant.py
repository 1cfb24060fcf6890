"""The second immanant, its polynomials, masks, and the permutation oracle.

The second immanant of a k-by-k matrix M is

    d2(M) = sum_i m_ii * det(M(i)) - det(M)

where M(i) removes row and column i. Equivalently it is the immanant for the
irreducible character of the symmetric group attached to the hook shape
(2, 1, ..., 1), whose value on a permutation is sgn * (fixed points - 1);
``d2_oracle`` computes that permutation sum directly and exists purely as an
independent cross-check of ``d2``.

Boundary conventions (with det of the empty matrix equal to 1): d2 of the
0x0 matrix is -1 and d2 of any 1x1 matrix is 0. These are exactly the values
that make the edge-deck identities hold for the smallest graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Digraph, Graph, adjacency_matrix, adjacency_matrix_directed, in_degree_matrix
from .linalg import char_poly, det
from .matrix import IntMatrix
from .parallel import pmap
from .poly import IntPolynomial, poly_sum

DEFAULT_ORACLE_LIMIT = 9


@dataclass(frozen=True)
class ImmanantKind:
    """Which shifted matrix a digraph polynomial is built from.

    The polynomial is d2(x*I - eta*D - alpha*A) where D is the in-degree
    diagonal matrix and A the arc matrix:

    * g1: eta=0, alpha=1   (adjacency)
    * g2: eta=1, alpha=-1  (Laplacian, D - A)
    * g3: eta=1, alpha=1   (signless Laplacian, D + A)

    ``tau`` is the same functional as g1 applied to an undirected adjacency
    matrix.
    """

    name: str
    eta: int
    alpha: int

    def __post_init__(self) -> None:
        if self.eta not in (0, 1):
            raise ValueError(f"eta must be 0 or 1, got {self.eta}")
        if self.alpha not in (-1, 1):
            raise ValueError(f"alpha must be -1 or 1, got {self.alpha}")


TAU = ImmanantKind("tau", 0, 1)
G1 = ImmanantKind("g1", 0, 1)
G2 = ImmanantKind("g2", 1, -1)
G3 = ImmanantKind("g3", 1, 1)

KINDS: dict[str, ImmanantKind] = {k.name: k for k in (TAU, G1, G2, G3)}


def resolve_kind(kind: ImmanantKind | str) -> ImmanantKind:
    if isinstance(kind, ImmanantKind):
        return kind
    try:
        return KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {sorted(KINDS)}") from None


def d2(m: IntMatrix, crt_threshold: int | None = None, workers: int | None = None) -> int:
    """Second immanant via exact determinants of the matrix and its minors."""
    total = -det(m, crt_threshold, workers)
    for i in range(m.k):
        mii = m.rows[i][i]
        if mii:
            total += mii * det(m.principal_minor(i), crt_threshold, workers)
    return total


def d2_oracle(m: IntMatrix, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Second immanant as the literal permutation sum; independent of d2.

    Sums sgn(sigma) * (fix(sigma) - 1) * prod_i m[i][sigma(i)] over all
    permutations, enumerated by depth-first column assignment with zero
    pruning. Only sizes 2..limit are supported.
    """
    k = m.k
    if k < 2 or k > limit:
        raise ValueError(f"oracle supports sizes 2..{limit}, got {k}")
    rows = m.rows
    free: list[int] = list(range(k))
    total = 0

    def place(r: int, sign: int, fix: int, prod: int) -> None:
        nonlocal total
        if r == k:
            if fix != 1:
                total += sign * (fix - 1) * prod
            return
        row = rows[r]
        for t in range(len(free)):
            c = free.pop(t)
            v = row[c]
            if v:
                # removing the t-th smallest free column adds t inversions
                place(
                    r + 1,
                    -sign if t & 1 else sign,
                    fix + (c == r),
                    prod * v,
                )
            free.insert(t, c)

    place(0, 1, 0, 1)
    return total


def second_immanantal_poly(
    m: IntMatrix, workers: int | None = None, strategy: str = "auto"
) -> IntPolynomial:
    """The polynomial d2(x*I - m), exactly.

    Built from characteristic polynomials: with phi = det(x*I - m) and
    phi_i the characteristic polynomial of the i-th principal minor,

        d2(x*I - m) = sum_i (x - m_ii) * phi_i - phi
                    = x * phi' - sum_i m_ii * phi_i - phi,

    using that phi' = sum_i phi_i. Only minors with a non-zero diagonal
    entry contribute to the weighted sum, so zero-diagonal matrices (all
    adjacency matrices) need just one characteristic polynomial.
    """
    phi = char_poly(m, strategy=strategy, workers=workers)
    result = phi.derivative().shift_mul_x() - phi
    weighted = [(i, m.rows[i][i]) for i in range(m.k) if m.rows[i][i]]
    if weighted:
        minors = pmap(
            lambda iw: iw[1] * char_poly(m.principal_minor(iw[0]), strategy=strategy),
            weighted,
            workers,
        )
        result = result - poly_sum(minors)
    return result


def tau(g: Graph, workers: int | None = None, strategy: str = "auto") -> IntPolynomial:
    """Second immanantal polynomial of an undirected graph's adjacency matrix.

    Degree n with leading coefficient n - 1 (for n >= 1); the 0-vertex graph
    yields the constant polynomial -1.
    """
    return second_immanantal_poly(adjacency_matrix(g), workers, strategy)


def kind_matrix(d: Digraph, kind: ImmanantKind | str) -> IntMatrix:
    """The matrix eta*D + alpha*A whose shifted second immanant is g(d; x)."""
    k = resolve_kind(kind)
    m = k.alpha * adjacency_matrix_directed(d)
    if k.eta:
        m = m + in_degree_matrix(d)
    return m


def g_poly(
    d: Digraph,
    kind: ImmanantKind | str,
    workers: int | None = None,
    strategy: str = "auto",
) -> IntPolynomial:
    """Second immanantal polynomial of a digraph for the given kind."""
    return second_immanantal_poly(kind_matrix(d, kind), workers, strategy)


def mask_symmetric(b: IntMatrix, i: int, j: int) -> IntMatrix:
    """Copy of a symmetric matrix with entries (i, j) and (j, i) zeroed.

    Indices are 0-based. Masking a zero entry returns the matrix unchanged,
    and masking is idempotent. Asymmetric input is rejected.
    """
    if not b.is_symmetric():
        raise ValueError("mask_symmetric requires a symmetric matrix")
    if not (0 <= i < b.k and 0 <= j < b.k):
        raise IndexError(f"mask position ({i},{j}) out of range for size {b.k}")
    return b.with_entry(i, j, 0).with_entry(j, i, 0)


def mask_directed(r: IntMatrix, i: int, j: int) -> IntMatrix:
    """Copy of a matrix with only entry (i, j) zeroed (0-based indices)."""
    if not (0 <= i < r.k and 0 <= j < r.k):
        raise IndexError(f"mask position ({i},{j}) out of range for size {r.k}")
    return r.with_entry(i, j, 0)
