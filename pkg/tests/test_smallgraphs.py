import random

import pytest

from grundytd import (
    are_isomorphic,
    connected_cubic_graphs,
    connected_graphs,
    cycle,
    graph_canonical_form,
    k_kk,
    path,
    petersen,
    random_connected_graph,
    random_hypergraph,
    random_tree,
    structural_report,
)


def test_connected_counts_small():
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.slow
def test_connected_count_order_eight():
    assert len(connected_graphs(8)) == 11117


def test_cubic_counts():
    assert [len(connected_cubic_graphs(n)) for n in (4, 6, 8, 10)] == [1, 2, 5, 19]


@pytest.mark.slow
def test_cubic_count_order_twelve():
    assert len(connected_cubic_graphs(12)) == 85


def test_cubic_graphs_are_cubic_and_connected():
    for n in (4, 6, 8):
        for g in connected_cubic_graphs(n):
            rep = structural_report(g)
            assert rep.connected
            assert rep.regular_degree == 3


def test_odd_order_has_no_cubic_graphs():
    assert connected_cubic_graphs(5) == []


def test_enumeration_has_no_duplicates():
    for n in range(2, 7):
        forms = {graph_canonical_form(g) for g in connected_graphs(n)}
        assert len(forms) == len(connected_graphs(n))


def test_known_graphs_appear_in_enumeration():
    found_cycle = any(are_isomorphic(g, cycle(6)) for g in connected_graphs(6))
    found_path = any(are_isomorphic(g, path(6)) for g in connected_graphs(6))
    assert found_cycle and found_path
    assert any(are_isomorphic(g, k_kk(3)) for g in connected_cubic_graphs(6))
    assert any(are_isomorphic(g, petersen()) for g in connected_cubic_graphs(10))


def test_canonical_form_isomorphism_invariance():
    # relabel a few graphs randomly; forms must not move
    rng = random.Random(9)
    from grundytd import Graph

    for _ in range(40):
        g = random_connected_graph(rng.randint(2, 8), 0.45, rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        edges = [
            (perm[u], perm[v])
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if g.adj[u] >> v & 1
        ]
        h = Graph.from_edges(g.n, edges)
        assert graph_canonical_form(g) == graph_canonical_form(h)
        assert are_isomorphic(g, h)


def test_nonisomorphic_pairs_distinguished():
    assert not are_isomorphic(path(4), star(3) if False else cycle(4))
    assert not are_isomorphic(k_kk(3), cycle(6))
    # same degree sequence, different graphs
    from grundytd import Graph

    g1 = cycle(6)
    g2 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not are_isomorphic(g1, g2)


def test_random_tree_is_tree():
    rng = random.Random(10)
    for _ in range(50):
        n = rng.randint(2, 14)
        t = random_tree(n, rng)
        rep = structural_report(t)
        assert t.n == n and rep.is_tree and rep.connected


def test_random_connected_graph_is_connected():
    rng = random.Random(11)
    for _ in range(50):
        g = random_connected_graph(rng.randint(2, 10), 0.3, rng)
        assert structural_report(g).connected


def test_random_hypergraph_within_limits():
    rng = random.Random(12)
    for _ in range(60):
        h = random_hypergraph(rng)
        assert 2 <= h.n_vertices <= 6
        assert 1 <= len(h.edges) <= 6
        assert all(h.edges[i] for i in range(len(h.edges)))
