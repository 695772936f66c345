import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grundytd import (
    Graph,
    Hypergraph,
    ParseError,
    graph_from_edge_list,
    graph_from_graph6,
    graph_to_edge_list,
    graph_to_graph6,
    hypergraph_from_text,
    hypergraph_to_text,
    path,
)


def graphs(max_n=12):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        picked = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
        return Graph.from_edges(n, sorted(picked))

    return build()


def test_k2_from_edge_list():
    g = graph_from_edge_list("2 1\n0 1")
    assert g.n == 2 and g.adj == (2, 1)


def test_edge_list_self_loop_rejected():
    with pytest.raises(ParseError):
        graph_from_edge_list("1 1\n0 0")


def test_edge_list_header_mismatch_rejected():
    with pytest.raises(ParseError):
        graph_from_edge_list("2 2\n0 1")


def test_graph6_p3_roundtrip():
    s = graph_to_graph6(path(3))
    assert len(s) == 1 + 1  # one size byte + one adjacency byte
    g = graph_from_graph6(s)
    assert g.adj == path(3).adj


def test_graph6_known_encodings():
    # standard encodings for small graphs
    assert graph_to_graph6(path(2)) == "A_"
    assert graph_from_graph6("A_").adj == (2, 1)
    assert graph_from_graph6("D?{").n == 5


def test_graph6_optional_header_prefix():
    s = ">>graph6<<" + graph_to_graph6(path(4))
    assert graph_from_graph6(s).adj == path(4).adj


def test_graph6_rejects_trailing_garbage():
    s = graph_to_graph6(path(4))
    with pytest.raises(ParseError):
        graph_from_graph6(s + "!!!!")


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_graph6_roundtrip(g):
    assert graph_from_graph6(graph_to_graph6(g)).adj == g.adj


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=70))
def test_graph6_roundtrip_long_form(g):
    # orders above 62 need the multi-byte size prefix
    assert graph_from_graph6(graph_to_graph6(g)).adj == g.adj


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_edge_list_roundtrip(g):
    assert graph_from_edge_list(graph_to_edge_list(g)).adj == g.adj


def test_hypergraph_text_roundtrip():
    h = Hypergraph.from_edge_lists(3, [[0], [1, 2], [0, 2]])
    text = hypergraph_to_text(h)
    back = hypergraph_from_text(text)
    assert back.n_vertices == 3 and back.edges == h.edges


def test_hypergraph_text_shape():
    h = hypergraph_from_text("2 3\n0\n1\n0 1\n")
    assert h.n_vertices == 2
    assert [sorted(h.edge_members(i)) for i in range(3)] == [[0], [1], [0, 1]]


def test_hypergraph_text_bad_vertex_rejected():
    with pytest.raises(ParseError):
        hypergraph_from_text("2 1\n0 5\n")


def test_hypergraph_text_edge_count_mismatch_rejected():
    with pytest.raises(ParseError):
        hypergraph_from_text("2 2\n0 1\n")
