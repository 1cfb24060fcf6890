"""Reconstruction of deck polynomials from the first-order sum identity.

A deck is the multiset of subgraph polynomials: pairs (p(g-e), p(g-u-v)) per
edge in the undirected case, one polynomial per arc in the directed case.
Writing R(x) for the sum of all deck polynomials, the target polynomial f
satisfies

    (m - n) * f(x) + x * f'(x) = R(x).

On the monomial basis this operator is diagonal: the coefficient of x^j is
scaled by (m - n + j), so reconstruction is n + 1 independent scalar
equations (m - n + j) * a_j = r_j. For m > n every equation is regular; for
m < n the single index j* = n - m has factor zero, leaving a_{j*} free (the
equation only demands r_{j*} = 0), which is reported as ``underdetermined``
rather than guessed. m = n is outside the method's hypothesis and reports
``unsupported``. All arithmetic is exact; a right-hand side that violates a
divisibility or zero constraint yields ``inconsistent``, never a silently
wrong polynomial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .graphs import Digraph, Graph, arc_deck, edge_deck_undirected
from .immanant import ImmanantKind, g_poly, resolve_kind, tau
from .parallel import pmap
from .poly import IntPolynomial, poly_sum


class DeckError(ValueError):
    """Malformed deck: bad metadata, entry count, or entry degrees."""


class ReconstructionStatus(str, enum.Enum):
    COMPLETE = "complete"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class CoefficientRecord:
    """How one coefficient equation (m - n + power) * a = rhs was resolved."""

    power: int
    factor: int
    rhs: int
    value: int | None
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "power": self.power,
            "factor": self.factor,
            "rhs": str(self.rhs),
            "value": None if self.value is None else str(self.value),
            "note": self.note,
        }


@dataclass(frozen=True)
class ReconstructionReport:
    status: ReconstructionStatus
    polynomial: IntPolynomial
    n: int
    m: int
    underdetermined_index: int | None
    diagnostics: tuple[CoefficientRecord, ...]

    def to_json_dict(self) -> dict:
        return {
            "status": self.status.value,
            "n": self.n,
            "m": self.m,
            "poly": self.polynomial.to_json_dict(),
            "underdetermined_index": self.underdetermined_index,
            "diagnostics": [rec.to_json_dict() for rec in self.diagnostics],
        }


@dataclass(frozen=True)
class UndirectedDeck:
    """Edge deck of an undirected graph: m pairs (p(g-e), p(g-u-v))."""

    n: int
    m: int
    entries: tuple[tuple[IntPolynomial, IntPolynomial], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0:
            raise DeckError("deck metadata must be non-negative")
        if self.m != len(self.entries):
            raise DeckError(f"deck claims m={self.m} but has {len(self.entries)} entries")
        for idx, (edge_poly, minor_poly) in enumerate(self.entries):
            if edge_poly.degree() != self.n:
                raise DeckError(
                    f"entry {idx}: edge-deleted polynomial has degree "
                    f"{edge_poly.degree()}, expected {self.n}"
                )
            if minor_poly.degree() > max(self.n - 2, 0):
                raise DeckError(
                    f"entry {idx}: vertex-deleted polynomial has degree "
                    f"{minor_poly.degree()}, expected at most {self.n - 2}"
                )


@dataclass(frozen=True)
class DirectedDeck:
    """Arc deck of a digraph: m polynomials p(d - arc) of one kind."""

    n: int
    m: int
    kind: ImmanantKind
    entries: tuple[IntPolynomial, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0:
            raise DeckError("deck metadata must be non-negative")
        if self.m != len(self.entries):
            raise DeckError(f"deck claims m={self.m} but has {len(self.entries)} entries")
        for idx, p in enumerate(self.entries):
            if p.degree() != self.n:
                raise DeckError(
                    f"entry {idx}: polynomial has degree {p.degree()}, expected {self.n}"
                )


def rhs_undirected(deck: UndirectedDeck) -> IntPolynomial:
    """Sum of all deck polynomials (both members of every pair)."""
    return poly_sum(p for pair in deck.entries for p in pair)


def rhs_directed(deck: DirectedDeck) -> IntPolynomial:
    return poly_sum(deck.entries)


def solve_ode(
    rhs: IntPolynomial,
    n: int,
    m: int,
    side_info: Mapping[int, int] | None = None,
    side_note: str = "side information",
) -> ReconstructionReport:
    """Solve (m - n + j) * a_j = r_j coefficient-wise for j = 0..n.

    ``side_info`` optionally supplies values for free indices (factor zero);
    it never overrides a regular equation. Divisibility failures and non-zero
    right sides at a free index make the report inconsistent.
    """
    if n < 0:
        raise DeckError("n must be non-negative")
    if rhs.degree() > n:
        raise DeckError(f"right-hand side degree {rhs.degree()} exceeds n={n}")
    if m == n:
        return ReconstructionReport(
            ReconstructionStatus.UNSUPPORTED, IntPolynomial(()), n, m, None, ()
        )
    side = dict(side_info or {})
    coeffs = [0] * (n + 1)
    records: list[CoefficientRecord] = []
    free_index: int | None = None
    inconsistent = False
    for j in range(n + 1):
        factor = m - n + j
        r = rhs.coefficient(j)
        if factor == 0:
            if r != 0:
                inconsistent = True
                records.append(
                    CoefficientRecord(j, factor, r, None, "free index with non-zero right side")
                )
            elif j in side:
                coeffs[j] = side[j]
                records.append(CoefficientRecord(j, factor, r, side[j], side_note))
            else:
                free_index = j
                records.append(CoefficientRecord(j, factor, r, None, "free index"))
        else:
            q, rem = divmod(r, factor)
            if rem:
                inconsistent = True
                records.append(CoefficientRecord(j, factor, r, None, "not divisible"))
            else:
                coeffs[j] = q
                records.append(CoefficientRecord(j, factor, r, q))
    if inconsistent:
        status = ReconstructionStatus.INCONSISTENT
    elif free_index is not None:
        status = ReconstructionStatus.UNDERDETERMINED
    else:
        status = ReconstructionStatus.COMPLETE
    return ReconstructionReport(
        status,
        IntPolynomial.from_coeffs(coeffs),
        n,
        m,
        free_index,
        tuple(records),
    )


def reconstruct_tau(
    deck: UndirectedDeck, side_info: Mapping[int, int] | None = None
) -> ReconstructionReport:
    """Reconstruct the undirected polynomial from its edge deck.

    The leading coefficient of the target is structurally n - 1, so when the
    free index lands on the leading position (edgeless deck, m = 0) it is
    filled from that fact; every other free index is left open unless the
    caller supplies ``side_info``.
    """
    side = dict(side_info or {})
    note = "side information"
    if deck.m == 0 and deck.n >= 1 and deck.n not in side:
        side[deck.n] = deck.n - 1
        note = "structural leading coefficient"
    return solve_ode(rhs_undirected(deck), deck.n, deck.m, side, note)


def reconstruct_g(
    deck: DirectedDeck, side_info: Mapping[int, int] | None = None
) -> ReconstructionReport:
    """Reconstruct the directed polynomial of the deck's kind from its arc deck."""
    return solve_ode(rhs_directed(deck), deck.n, deck.m, side_info)


# ---------------------------------------------------------------------------
# forward deck construction and JSON interchange
# ---------------------------------------------------------------------------


def build_undirected_deck(g: Graph, workers: int | None = None) -> UndirectedDeck:
    """Forward-compute the edge deck polynomials of a graph."""
    triples = edge_deck_undirected(g)
    entries = pmap(
        lambda t: (tau(t[1]), tau(t[2])),
        triples,
        workers,
    )
    return UndirectedDeck(g.n, g.m, tuple(entries))


def build_directed_deck(
    d: Digraph, kind: ImmanantKind | str, workers: int | None = None
) -> DirectedDeck:
    """Forward-compute the arc deck polynomials of a digraph for one kind."""
    k = resolve_kind(kind)
    entries = pmap(lambda pair: g_poly(pair[1], k), arc_deck(d), workers)
    return DirectedDeck(d.n, d.m, k, tuple(entries))


def deck_to_json_dict(deck: UndirectedDeck | DirectedDeck) -> dict:
    if isinstance(deck, UndirectedDeck):
        return {
            "n": deck.n,
            "m": deck.m,
            "kind": "tau",
            "entries": [[a.to_strings(), b.to_strings()] for a, b in deck.entries],
        }
    return {
        "n": deck.n,
        "m": deck.m,
        "kind": deck.kind.name,
        "entries": [p.to_strings() for p in deck.entries],
    }


def _is_coeff_array(item) -> bool:
    return isinstance(item, list) and all(isinstance(c, (str, int)) for c in item)


def deck_from_json_dict(doc: dict) -> UndirectedDeck | DirectedDeck:
    """Parse a deck from {"n", "m", "kind", "entries"}.

    Undirected entries are pairs of coefficient arrays; directed entries are
    single coefficient arrays. Coefficients are decimal strings (plain
    integers also accepted). A missing "kind" is inferred from entry shape.
    """
    if not isinstance(doc, dict):
        raise DeckError("deck must be a JSON object")
    try:
        n = doc["n"]
        m = doc["m"]
        entries = doc["entries"]
    except KeyError as exc:
        raise DeckError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(n, int) or not isinstance(m, int) or isinstance(n, bool):
        raise DeckError("'n' and 'm' must be integers")
    if not isinstance(entries, list):
        raise DeckError("'entries' must be an array")
    kind_name = doc.get("kind")
    if kind_name is None:
        if entries and _is_coeff_array(entries[0]):
            kind_name = "g1"
        else:
            kind_name = "tau"
    if kind_name not in ("tau", "g1", "g2", "g3"):
        raise DeckError(f"unknown kind {kind_name!r}")

    def parse_poly(item, where: str) -> IntPolynomial:
        if not _is_coeff_array(item):
            raise DeckError(f"{where}: expected an array of decimal-string coefficients")
        try:
            return IntPolynomial.from_strings(item)
        except ValueError as exc:
            raise DeckError(f"{where}: {exc}") from None

    if kind_name == "tau":
        pairs = []
        for idx, item in enumerate(entries):
            if not isinstance(item, list) or len(item) != 2:
                raise DeckError(f"entry {idx}: expected a pair of polynomials")
            pairs.append(
                (parse_poly(item[0], f"entry {idx}[0]"), parse_poly(item[1], f"entry {idx}[1]"))
            )
        return UndirectedDeck(n, m, tuple(pairs))
    polys = tuple(parse_poly(item, f"entry {idx}") for idx, item in enumerate(entries))
    return DirectedDeck(n, m, resolve_kind(kind_name), polys)
