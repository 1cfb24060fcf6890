from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from immanantal import (
    Digraph,
    EdgeListError,
    Graph,
    GraphFormatError,
    adjacency_matrix,
    adjacency_matrix_directed,
    arc_deck,
    edge_deck_undirected,
    encode_digraph6,
    encode_graph6,
    in_degree_matrix,
    in_degree_sequence,
    mask_directed,
    mask_symmetric,
    parse_digraph6,
    parse_edge_list_json,
    parse_graph6,
    parse_sparse6,
    parse_undirected_line,
)
from immanantal.identities import RandomSpec, random_digraph, random_graph


# --- graph6 ---------------------------------------------------------------


def test_parse_graph6_fixtures():
    # decoded by hand against the published byte layout
    assert parse_graph6("A_") == Graph(2, frozenset({(1, 2)}))
    assert parse_graph6("?") == Graph(0, frozenset())
    assert parse_graph6("Bw") == Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])
    assert parse_graph6(">>graph6<<A_") == Graph(2, frozenset({(1, 2)}))
    assert parse_graph6("@") == Graph(1, frozenset())


def test_parse_graph6_errors():
    with pytest.raises(GraphFormatError):
        parse_graph6("")
    with pytest.raises(GraphFormatError, match="trailing"):
        parse_graph6("A_?")
    with pytest.raises(GraphFormatError, match="truncated|payload"):
        parse_graph6("B")
    with pytest.raises(GraphFormatError, match="offset"):
        parse_graph6("A!")
    with pytest.raises(GraphFormatError, match="padding"):
        parse_graph6("A" + chr(63 + 33))  # stray bit below the single pair bit
    with pytest.raises(GraphFormatError, match="sparse6"):
        parse_graph6(":Bd")
    with pytest.raises(GraphFormatError, match="digraph6"):
        parse_graph6("&AO")


def test_graph6_long_size_field():
    g = Graph(63, frozenset())
    line = encode_graph6(g)
    assert line.startswith(chr(126))
    assert parse_graph6(line) == g


def test_parse_digraph6_fixtures():
    assert parse_digraph6("&AO") == Digraph(2, frozenset({(1, 2)}))
    assert parse_digraph6("&?") == Digraph(0, frozenset())
    assert parse_digraph6("&A?") == Digraph(2, frozenset())
    # both antiparallel arcs: bits 0110 -> value 24 -> 'W'
    assert parse_digraph6("&AW") == Digraph(2, frozenset({(1, 2), (2, 1)}))
    assert parse_digraph6(">>digraph6<<&AO") == Digraph(2, frozenset({(1, 2)}))


def test_parse_digraph6_errors():
    with pytest.raises(GraphFormatError, match="'&'"):
        parse_digraph6("AO")
    with pytest.raises(GraphFormatError, match="loop"):
        parse_digraph6("&A_")  # diagonal bit set
    with pytest.raises(GraphFormatError):
        parse_digraph6("&A")


def test_parse_sparse6_fixtures():
    # strings produced by an independent encoder
    assert parse_sparse6(":Bd") == Graph.from_edges(3, [(1, 2), (2, 3)])
    assert parse_sparse6(":C") == Graph(4, frozenset())
    assert parse_sparse6(":DaY_~") == Graph.from_edges(
        5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]
    )
    assert parse_sparse6(":Fa@_Q_QM@Gs_QLD") == Graph.from_edges(
        7, [(u, v) for u in range(1, 8) for v in range(u + 1, 8)]
    )
    assert parse_undirected_line(":Bd") == parse_sparse6(":Bd")
    assert parse_undirected_line("A_") == parse_graph6("A_")


def test_parse_sparse6_errors():
    with pytest.raises(GraphFormatError, match="':'"):
        parse_sparse6("Bd")


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=14), st.integers(min_value=0, max_value=10**9))
def test_graph6_round_trip_random(n, seed):
    g = random_graph(RandomSpec(n=n, seed=seed))
    assert parse_graph6(encode_graph6(g)) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10**9))
def test_digraph6_round_trip_random(n, seed):
    d = random_digraph(RandomSpec(n=n, directed=True, seed=seed))
    assert parse_digraph6(encode_digraph6(d)) == d


def test_parse_then_encode_is_identity_on_corpus(graph_corpus_lines, digraph_corpus_lines):
    for line in graph_corpus_lines:
        assert encode_graph6(parse_graph6(line)) == line
    for line in digraph_corpus_lines:
        assert encode_digraph6(parse_digraph6(line)) == line


# --- JSON edge lists ------------------------------------------------------


def test_parse_edge_list_json():
    assert parse_edge_list_json('{"n":2,"directed":false,"edges":[[1,2]]}') == Graph(
        2, frozenset({(1, 2)})
    )
    assert parse_edge_list_json('{"n":3,"directed":true,"edges":[[1,2],[2,3]]}') == Digraph(
        3, frozenset({(1, 2), (2, 3)})
    )
    assert parse_edge_list_json({"n": 0, "directed": False, "edges": []}) == Graph(
        0, frozenset()
    )
    # antiparallel arcs are distinct in a digraph
    d = parse_edge_list_json('{"n":2,"directed":true,"edges":[[1,2],[2,1]]}')
    assert d.m == 2


@pytest.mark.parametrize(
    "doc,fragment",
    [
        ('{"n":2,"directed":false,"edges":[[1,1]]}', "loop [1,1]"),
        ('{"n":2,"directed":false,"edges":[[1,2],[2,1]]}', "duplicate edge [2,1]"),
        ('{"n":2,"directed":true,"edges":[[1,2],[1,2]]}', "duplicate edge [1,2]"),
        ('{"n":2,"directed":false,"edges":[[1,3]]}', "outside 1..2"),
        ('{"n":2,"directed":false}', "edges"),
        ('{"n":-1,"directed":false,"edges":[]}', "non-negative"),
        ("not json", "invalid JSON"),
        ('{"n":2,"directed":false,"edges":[[1]]}', "pair"),
    ],
)
def test_parse_edge_list_json_errors(doc, fragment):
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list_json(doc)
    assert fragment in str(exc.value)


# --- matrices -------------------------------------------------------------


def test_adjacency_matrix_fixtures():
    k2 = parse_graph6("A_")
    assert adjacency_matrix(k2).rows == ((0, 1), (1, 0))
    assert adjacency_matrix(Graph(3, frozenset())).rows == (
        (0, 0, 0),
        (0, 0, 0),
        (0, 0, 0),
    )
    p3 = Graph.from_edges(3, [(1, 2), (2, 3)])
    assert adjacency_matrix(p3).rows == ((0, 1, 0), (1, 0, 1), (0, 1, 0))


def test_adjacency_matrix_properties(graph_corpus):
    for g in graph_corpus[::37]:
        a = adjacency_matrix(g)
        assert a.is_symmetric()
        assert all(a.rows[i][i] == 0 for i in range(g.n))


def test_adjacency_matrix_directed_fixtures():
    d = Digraph(2, frozenset({(1, 2)}))
    assert adjacency_matrix_directed(d).rows == ((0, 1), (0, 0))
    both = Digraph(2, frozenset({(1, 2), (2, 1)}))
    assert adjacency_matrix_directed(both).rows == ((0, 1), (1, 0))
    assert adjacency_matrix_directed(Digraph(2, frozenset())).rows == ((0, 0), (0, 0))


def test_in_degree_matrix_fixtures():
    d = Digraph(2, frozenset({(1, 2)}))
    assert in_degree_matrix(d).rows == ((0, 0), (0, 1))
    d2 = Digraph(3, frozenset({(1, 2), (3, 2)}))
    assert in_degree_matrix(d2).rows == ((0, 0, 0), (0, 2, 0), (0, 0, 0))
    assert in_degree_sequence(d2) == (0, 2, 0)
    assert sum(in_degree_sequence(d2)) == d2.m


def test_in_degrees_are_column_sums(digraph_corpus):
    for d in digraph_corpus[::11]:
        a = adjacency_matrix_directed(d)
        cols = tuple(sum(a.rows[i][j] for i in range(d.n)) for j in range(d.n))
        assert cols == in_degree_sequence(d)


# --- decks ----------------------------------------------------------------


def test_edge_deck_k2():
    k2 = parse_graph6("A_")
    deck = edge_deck_undirected(k2)
    assert len(deck) == 1
    edge, minus_e, minus_uv = deck[0]
    assert edge == (1, 2)
    assert minus_e == Graph(2, frozenset())
    assert minus_uv == Graph(0, frozenset())


def test_edge_deck_p3():
    p3 = Graph.from_edges(3, [(1, 2), (2, 3)])
    deck = edge_deck_undirected(p3)
    assert len(deck) == 2
    for _, minus_e, minus_uv in deck:
        assert minus_e.n == 3 and minus_e.m == 1
        assert minus_uv == Graph(1, frozenset())


def test_deck_sizes(graph_corpus, digraph_corpus):
    for g in graph_corpus[::53]:
        assert len(edge_deck_undirected(g)) == g.m
    for d in digraph_corpus[::17]:
        assert len(arc_deck(d)) == d.m
        for (u, v), sub in arc_deck(d):
            assert sub.n == d.n and sub.m == d.m - 1
            assert sub.in_degrees()[v - 1] == d.in_degrees()[v - 1] - 1


def test_vertex_relabeling_is_order_preserving():
    g = Graph.from_edges(5, [(1, 3), (2, 5), (4, 5), (1, 4)])
    h = g.delete_vertices(1, 4)  # keeps 2,3,5 -> relabeled 1,2,3
    assert h == Graph.from_edges(3, [(1, 3)])


def test_edge_deletion_equals_symmetric_mask(graph_corpus):
    for g in graph_corpus[200:1220:101]:
        a = adjacency_matrix(g)
        for u, v in g.sorted_edges():
            assert adjacency_matrix(g.delete_edge(u, v)) == mask_symmetric(a, u - 1, v - 1)


def test_arc_deletion_equals_directed_mask(digraph_corpus):
    for d in digraph_corpus[::23]:
        a = adjacency_matrix_directed(d)
        for u, v in d.sorted_arcs():
            assert adjacency_matrix_directed(d.delete_arc(u, v)) == mask_directed(
                a, u - 1, v - 1
            )


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(2, 1)}))  # not normalized
    with pytest.raises(ValueError):
        Graph(1, frozenset({(1, 2)}))
    with pytest.raises(ValueError):
        Digraph(2, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])
    g = Graph.from_edges(3, [(3, 1)])
    assert g.has_edge(1, 3) and g.has_edge(3, 1)
    with pytest.raises(ValueError):
        g.delete_edge(1, 2)
