"""Exact second-immanantal polynomials of graphs and digraphs.

Core objects: simple graphs/digraphs with text-format ingestion, exact
integer matrices and polynomials, the second immanant d2 and its shifted
polynomials, verifiers for the masking/deck summation identities, and
reconstruction of the polynomials from edge decks.
"""

from .graphs import (
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
    parse_digraph6,
    parse_edge_list_json,
    parse_graph6,
    parse_sparse6,
    parse_undirected_line,
)
from .immanant import (
    G1,
    G2,
    G3,
    KINDS,
    TAU,
    ImmanantKind,
    d2,
    d2_oracle,
    g_poly,
    kind_matrix,
    mask_directed,
    mask_symmetric,
    resolve_kind,
    second_immanantal_poly,
    tau,
)
from .linalg import (
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
from .matrix import IntMatrix
from .poly import (
    IntPolynomial,
    poly_add,
    poly_derivative,
    poly_eval,
    poly_scale,
    poly_shift_mul_x,
    poly_sub,
    poly_sum,
)
from .reconstruct import (
    CoefficientRecord,
    DeckError,
    DirectedDeck,
    ReconstructionReport,
    ReconstructionStatus,
    UndirectedDeck,
    build_directed_deck,
    build_undirected_deck,
    deck_from_json_dict,
    deck_to_json_dict,
    reconstruct_g,
    reconstruct_tau,
    rhs_directed,
    rhs_undirected,
    solve_ode,
)

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "EdgeListError",
    "Graph",
    "GraphFormatError",
    "adjacency_matrix",
    "adjacency_matrix_directed",
    "arc_deck",
    "edge_deck_undirected",
    "encode_digraph6",
    "encode_graph6",
    "in_degree_matrix",
    "in_degree_sequence",
    "parse_digraph6",
    "parse_edge_list_json",
    "parse_graph6",
    "parse_sparse6",
    "parse_undirected_line",
    "G1",
    "G2",
    "G3",
    "KINDS",
    "TAU",
    "ImmanantKind",
    "d2",
    "d2_oracle",
    "g_poly",
    "kind_matrix",
    "mask_directed",
    "mask_symmetric",
    "resolve_kind",
    "second_immanantal_poly",
    "tau",
    "char_poly",
    "char_poly_crt",
    "char_poly_faddeev_leverrier",
    "char_poly_interp",
    "det",
    "det_bareiss",
    "det_crt",
    "hadamard_bound",
    "principal_minor_char_polys",
    "IntMatrix",
    "IntPolynomial",
    "poly_add",
    "poly_derivative",
    "poly_eval",
    "poly_scale",
    "poly_shift_mul_x",
    "poly_sub",
    "poly_sum",
    "CoefficientRecord",
    "DeckError",
    "DirectedDeck",
    "ReconstructionReport",
    "ReconstructionStatus",
    "UndirectedDeck",
    "build_directed_deck",
    "build_undirected_deck",
    "deck_from_json_dict",
    "deck_to_json_dict",
    "reconstruct_g",
    "reconstruct_tau",
    "rhs_directed",
    "rhs_undirected",
    "solve_ode",
    "__version__",
]
