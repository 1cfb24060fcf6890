from __future__ import annotations

from pathlib import Path

import pytest

from immanantal import Digraph, Graph, parse_digraph6, parse_graph6

DATA_DIR = Path(__file__).parent / "data"

GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
DIGRAPH_COUNTS = {0: 1, 1: 1, 2: 3, 3: 16, 4: 218}


@pytest.fixture(scope="session")
def graph_corpus_lines() -> list[str]:
    return (DATA_DIR / "graphs_n_le_7.g6").read_text(encoding="ascii").split()


@pytest.fixture(scope="session")
def graph_corpus(graph_corpus_lines) -> list[Graph]:
    graphs = [parse_graph6(line) for line in graph_corpus_lines]
    by_n: dict[int, int] = {}
    for g in graphs:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == GRAPH_COUNTS, "graph corpus is not the exhaustive n <= 7 set"
    return graphs


@pytest.fixture(scope="session")
def digraph_corpus_lines() -> list[str]:
    return (DATA_DIR / "digraphs_n_le_4.d6").read_text(encoding="ascii").split()


@pytest.fixture(scope="session")
def digraph_corpus(digraph_corpus_lines) -> list[Digraph]:
    digraphs = [parse_digraph6(line) for line in digraph_corpus_lines]
    by_n: dict[int, int] = {}
    for d in digraphs:
        by_n[d.n] = by_n.get(d.n, 0) + 1
    assert by_n == DIGRAPH_COUNTS, "digraph corpus is not the exhaustive n <= 4 set"
    return digraphs
