#!/usr/bin/env python3
"""Regenerate the exhaustive small-graph corpora under tests/data/.

Undirected graphs up to 7 vertices come from the networkx atlas and are
written in graph6 by networkx itself, so the corpus bytes are produced
independently of this package's own encoder. Digraphs up to 4 vertices are
enumerated by brute force over arc masks with a minimum-over-permutations
canonical form, then written in digraph6.

Run from the repository root:  python scripts/gen_corpora.py
"""

from __future__ import annotations

import sys
from itertools import permutations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from immanantal.graphs import Digraph, encode_digraph6  # noqa: E402

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
DIGRAPH_COUNTS = {0: 1, 1: 1, 2: 3, 3: 16, 4: 218}


def write_graphs() -> None:
    atlas = nx.graph_atlas_g()
    counts: dict[int, int] = {}
    lines = []
    for g in atlas:
        counts[g.number_of_nodes()] = counts.get(g.number_of_nodes(), 0) + 1
        lines.append(nx.to_graph6_bytes(g, header=False).decode("ascii").strip())
    assert counts == GRAPH_COUNTS, counts
    path = DATA_DIR / "graphs_n_le_7.g6"
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} graphs to {path}")


def _arc_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _canonical_mask(mask: int, pairs: list[tuple[int, int]], n: int) -> int:
    index = {pair: i for i, pair in enumerate(pairs)}
    best = None
    for perm in permutations(range(n)):
        relabeled = 0
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                relabeled |= 1 << index[(perm[u], perm[v])]
        if best is None or relabeled < best:
            best = relabeled
    return best


def write_digraphs() -> None:
    lines = []
    counts: dict[int, int] = {}
    for n in range(0, 5):
        pairs = _arc_pairs(n)
        seen: set[int] = set()
        for mask in range(1 << len(pairs)):
            canon = _canonical_mask(mask, pairs, n)
            if canon in seen:
                continue
            seen.add(canon)
            arcs = frozenset(
                (u + 1, v + 1) for i, (u, v) in enumerate(pairs) if canon >> i & 1
            )
            lines.append(encode_digraph6(Digraph(n, arcs)))
        counts[n] = len(seen)
    assert counts == DIGRAPH_COUNTS, counts
    path = DATA_DIR / "digraphs_n_le_4.d6"
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} digraphs to {path}")


if __name__ == "__main__":
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    write_graphs()
    write_digraphs()
