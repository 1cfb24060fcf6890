"""Simple graphs and digraphs, text-format ingestion, and deck enumeration.

Vertices are labeled 1..n in every public structure and file format; the
0-based world starts only inside matrices. Graphs are immutable: deletion
operations return new values.

Supported one-line text formats: graph6 and sparse6 for undirected graphs,
digraph6 for digraphs (payload is the full row-major adjacency matrix,
diagonal included). A JSON edge-list format is provided for hand-written
inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrix import IntMatrix

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"
DIGRAPH6_HEADER = ">>digraph6<<"

_MAX_ENCODABLE_N = 68719476735  # 36-bit size field


class GraphFormatError(ValueError):
    """Malformed graph6/sparse6/digraph6 input."""


class EdgeListError(ValueError):
    """Semantically invalid edge list (loop, duplicate, bad endpoint)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex set {1..n}; edges are pairs (u, v) with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) violates 1 <= u < v <= {self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def delete_edge(self, u: int, v: int) -> Graph:
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise ValueError(f"no edge ({u},{v}) to delete")
        return Graph(self.n, self.edges - {e})

    def delete_vertices(self, u: int, v: int) -> Graph:
        """Remove two vertices and their incident edges, relabeling the rest
        order-preservingly to 1..n-2."""
        if u == v:
            raise ValueError("delete_vertices needs two distinct vertices")
        gone = {u, v}
        remap = {}
        nxt = 1
        for w in range(1, self.n + 1):
            if w not in gone:
                remap[w] = nxt
                nxt += 1
        kept = frozenset(
            (remap[a], remap[b]) for a, b in self.edges if a not in gone and b not in gone
        )
        return Graph(self.n - 2, kept)


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on {1..n}; arcs are ordered pairs, antiparallel pairs allowed."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u},{v}) has endpoint outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def delete_arc(self, u: int, v: int) -> Digraph:
        if (u, v) not in self.arcs:
            raise ValueError(f"no arc ({u},{v}) to delete")
        return Digraph(self.n, self.arcs - {(u, v)})

    def in_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for _, v in self.arcs:
            deg[v - 1] += 1
        return tuple(deg)


# ---------------------------------------------------------------------------
# graph6 / sparse6 / digraph6
# ---------------------------------------------------------------------------


def _char_value(s: str, pos: int) -> int:
    c = ord(s[pos])
    if not 63 <= c <= 126:
        raise GraphFormatError(f"byte {c} at offset {pos} outside printable range 63..126")
    return c - 63


def _decode_size(s: str, pos: int) -> tuple[int, int]:
    """Decode the size field N(n) starting at ``pos``; return (n, next_pos)."""
    if pos >= len(s):
        raise GraphFormatError(f"missing size field at offset {pos}")
    v = _char_value(s, pos)
    if v < 63:
        return v, pos + 1
    if pos + 1 < len(s) and ord(s[pos + 1]) == 126:
        if pos + 8 > len(s):
            raise GraphFormatError(f"truncated 36-bit size field at offset {pos}")
        n = 0
        for i in range(pos + 2, pos + 8):
            n = n << 6 | _char_value(s, i)
        return n, pos + 8
    if pos + 4 > len(s):
        raise GraphFormatError(f"truncated 18-bit size field at offset {pos}")
    n = 0
    for i in range(pos + 1, pos + 4):
        n = n << 6 | _char_value(s, i)
    return n, pos + 4


def _encode_size(n: int) -> str:
    if n < 0 or n > _MAX_ENCODABLE_N:
        raise ValueError(f"vertex count {n} not encodable")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_bit_payload(s: str, pos: int, nbits: int) -> list[int]:
    """Read exactly ``nbits`` bits (zero-padded to byte groups) from s[pos:]."""
    need = (nbits + 5) // 6
    have = len(s) - pos
    if have < need:
        raise GraphFormatError(f"payload truncated: need {need} bytes, have {have}")
    if have > need:
        raise GraphFormatError(f"trailing bytes at offset {pos + need}")
    # most significant bit of each 6-bit group comes first
    bits: list[int] = []
    for i in range(pos, len(s)):
        v = _char_value(s, i)
        for shift in (5, 4, 3, 2, 1, 0):
            bits.append((v >> shift) & 1)
    for extra in range(nbits, len(bits)):
        if bits[extra]:
            raise GraphFormatError(f"non-zero padding bit in final byte at offset {len(s) - 1}")
    return bits[:nbits]


def _encode_bits(bits: Sequence[int]) -> str:
    out = []
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        v = 0
        for b in group:
            v = v << 1 | b
        v <<= 6 - len(group)
        out.append(chr(v + 63))
    return "".join(out)


def _strip_header(text: str, header: str) -> str:
    s = text.strip()
    if s.startswith(header):
        s = s[len(header) :]
    return s


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' header allowed)."""
    s = _strip_header(text, GRAPH6_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string")
    if s[0] == ":":
        raise GraphFormatError("sparse6 input (leading ':'); use parse_sparse6")
    if s[0] == "&":
        raise GraphFormatError("digraph6 input (leading '&'); use parse_digraph6")
    n, pos = _decode_size(s, 0)
    bits = _decode_bit_payload(s, pos, n * (n - 1) // 2)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph(n, frozenset(edges))


def encode_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i + 1, j + 1) in g.edges else 0)
    return _encode_size(g.n) + _encode_bits(bits)


def parse_digraph6(text: str) -> Digraph:
    """Decode one digraph6 line: '&', size field, then row-major adjacency bits."""
    s = _strip_header(text, DIGRAPH6_HEADER)
    if not s or s[0] != "&":
        raise GraphFormatError("digraph6 line must start with '&'")
    n, pos = _decode_size(s, 1)
    bits = _decode_bit_payload(s, pos, n * n)
    arcs = []
    for i in range(n):
        for j in range(n):
            if bits[i * n + j]:
                if i == j:
                    raise GraphFormatError(f"loop at vertex {i + 1} (diagonal bit set)")
                arcs.append((i + 1, j + 1))
    return Digraph(n, frozenset(arcs))


def encode_digraph6(d: Digraph) -> str:
    n = d.n
    bits = [0] * (n * n)
    for u, v in d.arcs:
        bits[(u - 1) * n + (v - 1)] = 1
    return "&" + _encode_size(n) + _encode_bits(bits)


def parse_sparse6(text: str) -> Graph:
    """Decode one sparse6 line (':' prefix). Only simple graphs are accepted;
    loops or repeated edges in the stream raise GraphFormatError."""
    s = _strip_header(text, SPARSE6_HEADER)
    if not s or s[0] != ":":
        raise GraphFormatError("sparse6 line must start with ':'")
    n, pos = _decode_size(s, 1)
    k = max(1, (n - 1).bit_length())
    bits = []
    for i in range(pos, len(s)):
        v = _char_value(s, i)
        for shift in (5, 4, 3, 2, 1, 0):
            bits.append((v >> shift) & 1)
    edges: set[tuple[int, int]] = set()
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for t in range(i + 1, i + 1 + k):
            x = x << 1 | bits[t]
        i += 1 + k
        if b:
            v += 1
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise GraphFormatError(f"loop at vertex {v + 1} in sparse6 stream")
            e = (x + 1, v + 1)
            if e in edges:
                raise GraphFormatError(f"repeated edge ({x + 1},{v + 1}) in sparse6 stream")
            edges.add(e)
    return Graph(n, frozenset(edges))


def parse_undirected_line(text: str) -> Graph:
    """Parse a line that may be graph6 or sparse6 (dispatch on leading ':')."""
    s = _strip_header(text, GRAPH6_HEADER)
    if s.startswith(SPARSE6_HEADER) or s.startswith(":"):
        return parse_sparse6(s)
    return parse_graph6(s)


# ---------------------------------------------------------------------------
# JSON edge lists
# ---------------------------------------------------------------------------


def parse_edge_list_json(doc: str | bytes | dict) -> Graph | Digraph:
    """Parse {"n": int, "directed": bool, "edges": [[u, v], ...]} (1-based).

    Loops, duplicate edges (or duplicate arcs), and out-of-range endpoints are
    rejected with the offending pair named in the error.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise EdgeListError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise EdgeListError("edge list must be a JSON object")
    try:
        n = doc["n"]
        directed = doc["directed"]
        pairs = doc["edges"]
    except KeyError as exc:
        raise EdgeListError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise EdgeListError(f"'n' must be a non-negative integer, got {n!r}")
    if not isinstance(directed, bool):
        raise EdgeListError(f"'directed' must be a boolean, got {directed!r}")
    if not isinstance(pairs, list):
        raise EdgeListError("'edges' must be an array of [u, v] pairs")

    seen: set[tuple[int, int]] = set()
    cleaned: list[tuple[int, int]] = []
    for item in pairs:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise EdgeListError(f"edge entry {item!r} is not a pair of integers")
        u, v = item
        if u == v:
            raise EdgeListError(f"loop [{u},{v}] not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeListError(f"edge [{u},{v}] has endpoint outside 1..{n}")
        key = (u, v) if directed else ((u, v) if u < v else (v, u))
        if key in seen:
            raise EdgeListError(f"duplicate edge [{u},{v}]")
        seen.add(key)
        cleaned.append((u, v))
    if directed:
        return Digraph(n, frozenset(cleaned))
    return Graph.from_edges(n, cleaned)


def edge_list_json_dict(g: Graph | Digraph) -> dict:
    if isinstance(g, Graph):
        return {"n": g.n, "directed": False, "edges": [list(e) for e in g.sorted_edges()]}
    return {"n": g.n, "directed": True, "edges": [list(a) for a in g.sorted_arcs()]}


# ---------------------------------------------------------------------------
# matrices and decks
# ---------------------------------------------------------------------------


def adjacency_matrix(g: Graph) -> IntMatrix:
    """Symmetric 0/1 adjacency matrix with zero diagonal."""
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        rows[u - 1][v - 1] = 1
        rows[v - 1][u - 1] = 1
    return IntMatrix.from_rows(rows)


def adjacency_matrix_directed(d: Digraph) -> IntMatrix:
    """0/1 arc matrix: entry (i, j) is 1 iff there is an arc i+1 -> j+1."""
    n = d.n
    rows = [[0] * n for _ in range(n)]
    for u, v in d.arcs:
        rows[u - 1][v - 1] = 1
    return IntMatrix.from_rows(rows)


def in_degree_sequence(d: Digraph) -> tuple[int, ...]:
    return d.in_degrees()


def in_degree_matrix(d: Digraph) -> IntMatrix:
    """Diagonal matrix of vertex in-degrees."""
    return IntMatrix.diagonal(list(d.in_degrees()))


def edge_deck_undirected(g: Graph) -> list[tuple[tuple[int, int], Graph, Graph]]:
    """One (edge, g minus the edge, g minus both endpoints) triple per edge.

    Edge deletion keeps all n vertices; endpoint deletion drops to n-2
    vertices with order-preserving relabeling. Entries are sorted by edge.
    """
    return [(e, g.delete_edge(*e), g.delete_vertices(*e)) for e in g.sorted_edges()]


def arc_deck(d: Digraph) -> list[tuple[tuple[int, int], Digraph]]:
    """One (arc, d minus the arc) pair per arc, sorted by arc."""
    return [(a, d.delete_arc(*a)) for a in d.sorted_arcs()]
