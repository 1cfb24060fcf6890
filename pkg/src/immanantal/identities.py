"""Executable checks for the masking and deck summation identities.

Every verifier evaluates both sides of one exact identity and returns an
IdentityReport carrying the two values; ``holds`` is structural equality.
These identities are theorems for valid input, so any false report signals a
kernel bug, and the report keeps both sides for diffing.

The verifiers compare whole integers or whole polynomials, never point
evaluations. Identity ids used by the CLI: 2.2, 2.3, 2.4, 2.5 (symmetric /
undirected family), 3.2, 3.3, 3.4, 3.5 (general / directed family), and the
entrywise or rearranged forms eq3, eq4, eq13, eq8, eq22.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    Digraph,
    Graph,
    adjacency_matrix,
    arc_deck,
    edge_deck_undirected,
    encode_digraph6,
    encode_graph6,
)
from .immanant import (
    ImmanantKind,
    d2,
    g_poly,
    kind_matrix,
    mask_directed,
    mask_symmetric,
    resolve_kind,
    second_immanantal_poly,
    tau,
)
from .linalg import char_poly, det
from .matrix import IntMatrix
from .poly import IntPolynomial, poly_sum


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    instance: str
    lhs: int | IntPolynomial
    rhs: int | IntPolynomial
    holds: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        def side(v: int | IntPolynomial):
            return {"coeffs": v.to_strings()} if isinstance(v, IntPolynomial) else str(v)

        out = {
            "identity": self.identity,
            "instance": self.instance,
            "holds": self.holds,
            "lhs": side(self.lhs),
            "rhs": side(self.rhs),
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def _made(identity: str, instance: str, lhs, rhs, detail: str = "") -> IdentityReport:
    return IdentityReport(identity, instance, lhs, rhs, lhs == rhs, detail)


def matrix_instance(m: IntMatrix) -> str:
    digest = hashlib.sha256(repr(m.rows).encode()).hexdigest()[:10]
    return f"matrix k={m.k} sha {digest}"


def graph_instance(g: Graph) -> str:
    return "graph6:" + encode_graph6(g)


def digraph_instance(d: Digraph) -> str:
    return "digraph6:" + encode_digraph6(d)


def _require_symmetric(b: IntMatrix, who: str) -> None:
    if not b.is_symmetric():
        raise ValueError(f"{who} requires a symmetric matrix")


# ---------------------------------------------------------------------------
# entrywise determinant identities for masked matrices
# ---------------------------------------------------------------------------


def verify_masked_det_diagonal_sites(
    b: IntMatrix, instance: str | None = None
) -> list[IdentityReport]:
    """det of B with a diagonal entry zeroed, against the cofactor expansion:
    det(B_[ss]) = det(B) - b_ss * det(B minus row/col s). One report per s."""
    _require_symmetric(b, "eq3")
    inst = instance or matrix_instance(b)
    base = det(b)
    out = []
    for s in range(b.k):
        lhs = det(mask_symmetric(b, s, s))
        rhs = base - b.rows[s][s] * det(b.principal_minor(s))
        out.append(_made("eq3", inst, lhs, rhs, detail=f"s={s}"))
    return out


def verify_masked_det_offdiagonal_sites(
    b: IntMatrix, instance: str | None = None
) -> list[IdentityReport]:
    """det of B with a symmetric off-diagonal pair zeroed, against the two
    cofactors and the doubly-deleted minor. One report per i < j."""
    _require_symmetric(b, "eq4")
    inst = instance or matrix_instance(b)
    base = det(b)
    out = []
    for i in range(b.k):
        for j in range(i + 1, b.k):
            bij = b.rows[i][j]
            lhs = det(mask_symmetric(b, i, j))
            sign = -1 if (i + j) % 2 else 1
            # minor with row i, col j deleted and its mirror
            cof_ij = det(b.minor((i,), (j,)))
            cof_ji = det(b.minor((j,), (i,)))
            rhs = (
                base
                - sign * bij * cof_ij
                - sign * bij * cof_ji
                - bij * bij * det(b.minor((i, j), (i, j)))
            )
            out.append(_made("eq4", inst, lhs, rhs, detail=f"i={i} j={j}"))
    return out


def verify_masked_det_directed_sites(
    r: IntMatrix, instance: str | None = None
) -> list[IdentityReport]:
    """det of R with one entry zeroed equals det(R) minus that entry's
    cofactor term. One report per ordered position (i, j)."""
    inst = instance or matrix_instance(r)
    base = det(r)
    out = []
    for i in range(r.k):
        for j in range(r.k):
            sign = -1 if (i + j) % 2 else 1
            lhs = det(mask_directed(r, i, j))
            rhs = base - sign * r.rows[i][j] * det(r.minor((i,), (j,)))
            out.append(_made("eq13", inst, lhs, rhs, detail=f"i={i} j={j}"))
    return out


# ---------------------------------------------------------------------------
# summation identities over all masks
# ---------------------------------------------------------------------------


def verify_mask_sum_det_symmetric(b: IntMatrix, instance: str | None = None) -> IdentityReport:
    """(k^2-k)/2 * det(B) = sum over i<=j of det(B_[ij])
    + sum over i<j of b_ij^2 * det(B with rows/cols i,j deleted)."""
    _require_symmetric(b, "2.2")
    k = b.k
    if k < 2:
        raise ValueError("identity 2.2 needs size >= 2")
    inst = instance or matrix_instance(b)
    lhs = (k * k - k) // 2 * det(b)
    rhs = 0
    for i in range(k):
        for j in range(i, k):
            rhs += det(mask_symmetric(b, i, j))
            if i < j:
                bij = b.rows[i][j]
                if bij:
                    rhs += bij * bij * det(b.minor((i, j), (i, j)))
    return _made("2.2", inst, lhs, rhs)


def verify_mask_sum_d2_symmetric(b: IntMatrix, instance: str | None = None) -> IdentityReport:
    """(k^2-k)/2 * d2(B) = sum over i<=j of d2(B_[ij])
    + sum over i<j of b_ij^2 * d2(B with rows/cols i,j deleted)."""
    _require_symmetric(b, "2.3")
    k = b.k
    if k < 2:
        raise ValueError("identity 2.3 needs size >= 2")
    inst = instance or matrix_instance(b)
    lhs = (k * k - k) // 2 * d2(b)
    rhs = 0
    for i in range(k):
        for j in range(i, k):
            rhs += d2(mask_symmetric(b, i, j))
            if i < j:
                bij = b.rows[i][j]
                if bij:
                    rhs += bij * bij * d2(b.minor((i, j), (i, j)))
    return _made("2.3", inst, lhs, rhs)


def verify_support_sum_d2_symmetric(b: IntMatrix, instance: str | None = None) -> IdentityReport:
    """(m - c) * d2(B) = masked-d2 sum over the non-zero upper positions plus
    the weighted doubly-deleted sum, where 2m counts non-zero off-diagonal
    entries and c counts zero diagonal entries."""
    _require_symmetric(b, "2.4")
    k = b.k
    inst = instance or matrix_instance(b)
    off = sum(1 for i in range(k) for j in range(k) if i != j and b.rows[i][j])
    m_count = off // 2
    c_count = sum(1 for i in range(k) if b.rows[i][i] == 0)
    lhs = (m_count - c_count) * d2(b)
    rhs = 0
    for i in range(k):
        for j in range(i, k):
            if b.rows[i][j]:
                rhs += d2(mask_symmetric(b, i, j))
                if i < j:
                    bij = b.rows[i][j]
                    rhs += bij * bij * d2(b.minor((i, j), (i, j)))
    return _made("2.4", inst, lhs, rhs)


def verify_mask_sum_det(r: IntMatrix, instance: str | None = None) -> IdentityReport:
    """(k^2-k) * det(R) = sum of det(R_ij) over all ordered positions."""
    k = r.k
    if k < 2:
        raise ValueError("identity 3.2 needs size >= 2")
    inst = instance or matrix_instance(r)
    lhs = (k * k - k) * det(r)
    rhs = sum(det(mask_directed(r, i, j)) for i in range(k) for j in range(k))
    return _made("3.2", inst, lhs, rhs)


def verify_mask_sum_d2(r: IntMatrix, instance: str | None = None) -> IdentityReport:
    """(k^2-k) * d2(R) = sum of d2(R_ij) over all ordered positions."""
    k = r.k
    if k < 2:
        raise ValueError("identity 3.3 needs size >= 2")
    inst = instance or matrix_instance(r)
    lhs = (k * k - k) * d2(r)
    rhs = sum(d2(mask_directed(r, i, j)) for i in range(k) for j in range(k))
    return _made("3.3", inst, lhs, rhs)


def verify_support_sum_d2(r: IntMatrix, instance: str | None = None) -> IdentityReport:
    """(l - k) * d2(R) = sum of d2(R_ij) over the l non-zero positions."""
    k = r.k
    if k < 2:
        raise ValueError("identity 3.4 needs size >= 2")
    inst = instance or matrix_instance(r)
    support = [(i, j) for i in range(k) for j in range(k) if r.rows[i][j]]
    lhs = (len(support) - k) * d2(r)
    rhs = sum(d2(mask_directed(r, i, j)) for i, j in support)
    return _made("3.4", inst, lhs, rhs)


# ---------------------------------------------------------------------------
# deck summation identities (polynomial-valued)
# ---------------------------------------------------------------------------


def verify_edge_deck_identity(
    g: Graph, rhs_path: str = "subgraphs", instance: str | None = None
) -> IdentityReport:
    """(m-n) * tau + x * tau' = sum over edges of [tau(g-e) + tau(g-u-v)].

    ``rhs_path`` selects how the right side is assembled: "subgraphs" deletes
    edges/vertices from the graph, "masks" zeroes adjacency entries and takes
    matrix minors. The two routes are independent code paths for the same
    identity.
    """
    inst = instance or graph_instance(g)
    t = tau(g)
    lhs = (g.m - g.n) * t + t.derivative().shift_mul_x()
    if rhs_path == "subgraphs":
        parts = []
        for _, g_minus_e, g_minus_uv in edge_deck_undirected(g):
            parts.append(tau(g_minus_e))
            parts.append(tau(g_minus_uv))
        rhs = poly_sum(parts)
    elif rhs_path == "masks":
        a = adjacency_matrix(g)
        parts = []
        for u, v in g.sorted_edges():
            parts.append(second_immanantal_poly(mask_symmetric(a, u - 1, v - 1)))
            parts.append(second_immanantal_poly(a.minor((u - 1, v - 1), (u - 1, v - 1))))
        rhs = poly_sum(parts)
    else:
        raise ValueError(f"unknown rhs_path {rhs_path!r}")
    return _made("2.5", inst, lhs, rhs, detail=f"rhs from {rhs_path}")


def verify_derivative_split(g: Graph, instance: str | None = None) -> IdentityReport:
    """tau' equals the sum over vertices of the one-vertex-deleted
    characteristic and second immanantal polynomials."""
    inst = instance or graph_instance(g)
    a = adjacency_matrix(g)
    lhs = tau(g).derivative()
    parts = []
    for u in range(g.n):
        minor = a.principal_minor(u)
        parts.append(char_poly(minor))
        parts.append(second_immanantal_poly(minor))
    return _made("eq8", inst, lhs, poly_sum(parts))


def verify_arc_deck_identity(
    d: Digraph,
    kind: ImmanantKind | str,
    rhs_path: str = "subgraphs",
    instance: str | None = None,
) -> IdentityReport:
    """(m-n) * g + x * g' = sum over arcs of g(d - arc).

    Every deck member's polynomial uses the in-degree matrix recomputed for
    the arc-deleted digraph. The "masks" route builds each deck member's
    matrix directly: the arc entry is zeroed and the head's in-degree
    decremented.
    """
    k = resolve_kind(kind)
    inst = instance or digraph_instance(d)
    gp = g_poly(d, k)
    lhs = (d.m - d.n) * gp + gp.derivative().shift_mul_x()
    if rhs_path == "subgraphs":
        rhs = poly_sum(g_poly(sub, k) for _, sub in arc_deck(d))
    elif rhs_path == "masks":
        base = kind_matrix(d, k)
        parts = []
        for u, v in d.sorted_arcs():
            masked = base.with_entry(u - 1, v - 1, base.rows[u - 1][v - 1] - k.alpha)
            if k.eta:
                masked = masked.with_entry(v - 1, v - 1, masked.rows[v - 1][v - 1] - 1)
            parts.append(second_immanantal_poly(masked))
        rhs = poly_sum(parts)
    else:
        raise ValueError(f"unknown rhs_path {rhs_path!r}")
    return _made("3.5", inst, lhs, rhs, detail=f"kind {k.name}, rhs from {rhs_path}")


def verify_arc_deck_identity_rearranged(
    d: Digraph, kind: ImmanantKind | str, instance: str | None = None
) -> IdentityReport:
    """m * g = n * g - x * g' + sum over arcs of g(d - arc)."""
    k = resolve_kind(kind)
    inst = instance or digraph_instance(d)
    gp = g_poly(d, k)
    lhs = d.m * gp
    rhs = d.n * gp - gp.derivative().shift_mul_x() + poly_sum(
        g_poly(sub, k) for _, sub in arc_deck(d)
    )
    return _made("eq22", inst, lhs, rhs, detail=f"kind {k.name}")


# ---------------------------------------------------------------------------
# seeded random instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RandomSpec:
    """Deterministic instance description: same spec, same instance.

    Graphs draw one Bernoulli(edge_probability) per vertex pair in
    lexicographic order; matrices draw uniform entries from entry_range in
    row-major order (upper triangle first for the symmetric generator).
    """

    n: int
    edge_probability: Fraction = Fraction(1, 2)
    directed: bool = False
    entry_range: tuple[int, int] = (-5, 5)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        p = Fraction(self.edge_probability)
        if not 0 <= p <= 1:
            raise ValueError(f"edge probability {p} outside [0, 1]")
        lo, hi = self.entry_range
        if lo > hi:
            raise ValueError(f"empty entry range {self.entry_range}")


def _bernoulli(rng: random.Random, p: Fraction) -> bool:
    return rng.randrange(p.denominator) < p.numerator


def random_graph(spec: RandomSpec) -> Graph:
    rng = random.Random(spec.seed)
    p = Fraction(spec.edge_probability)
    edges = [
        (u, v)
        for u in range(1, spec.n + 1)
        for v in range(u + 1, spec.n + 1)
        if _bernoulli(rng, p)
    ]
    return Graph(spec.n, frozenset(edges))


def random_digraph(spec: RandomSpec) -> Digraph:
    rng = random.Random(spec.seed)
    p = Fraction(spec.edge_probability)
    arcs = [
        (u, v)
        for u in range(1, spec.n + 1)
        for v in range(1, spec.n + 1)
        if u != v and _bernoulli(rng, p)
    ]
    return Digraph(spec.n, frozenset(arcs))


def random_matrix(spec: RandomSpec) -> IntMatrix:
    rng = random.Random(spec.seed)
    lo, hi = spec.entry_range
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(spec.n)] for _ in range(spec.n)]
    )


def random_symmetric_matrix(spec: RandomSpec) -> IntMatrix:
    rng = random.Random(spec.seed)
    lo, hi = spec.entry_range
    rows = [[0] * spec.n for _ in range(spec.n)]
    for i in range(spec.n):
        for j in range(i, spec.n):
            v = rng.randint(lo, hi)
            rows[i][j] = v
            rows[j][i] = v
    return IntMatrix.from_rows(rows)
