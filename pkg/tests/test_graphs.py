from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from msquared import graphs as gr
from msquared.errors import BadParams, Disconnected


def random_graph(n, seed, density=0.5):
    rng = np.random.default_rng(seed)
    return gr.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < density])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges())
    return h


graphs = st.builds(random_graph, st.integers(1, 9), st.integers(0, 2**32), st.floats(0.1, 0.9))


def test_families():
    assert gr.complete(5).num_edges == 10
    assert gr.cycle(6).num_edges == 6 and all(gr.cycle(6).degree(v) == 2 for v in range(1, 7))
    assert gr.star(5).degree(1) == 4
    assert gr.wheel(6).degree(1) == 5
    assert gr.complete_multipartite((2, 3)).num_edges == 6
    k = gr.kite(6)
    assert k.n == 5 and k.num_edges == 7
    j = gr.jellyfish(3, 2)
    assert j.n == 5 and j.degree(1) == 4
    assert gr.build_family("cycle", "5").key() == gr.cycle(5).key()
    with pytest.raises(BadParams):
        gr.build_family("nope")
    with pytest.raises(BadParams):
        gr.build_family("petersen", 3)


def test_from_edges_validation():
    with pytest.raises(Exception):
        gr.from_edges(3, [(1, 1)])
    with pytest.raises(Exception):
        gr.from_edges(3, [(1, 4)])


def test_petersen():
    g = gr.petersen()
    assert g.n == 10 and g.num_edges == 15
    assert all(g.degree(v) == 3 for v in range(1, 11))
    assert gr.independence_number(g) == 4
    assert gr.diameter(g) == 2
    assert gr.clique_cover_number(g) == 5
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())
    assert gr.is_k_connected_cover(g, gr.petersen_spokes())


def test_wagner():
    g = gr.wagner()
    assert g.n == 8 and all(g.degree(v) == 3 for v in range(1, 9))


def test_operations():
    g, h = gr.path(3), gr.complete(2)
    u = gr.disjoint_union(g, h)
    assert u.n == 5 and u.num_edges == 3
    j = gr.join(g, h)
    assert j.num_edges == 2 + 1 + 6
    w = gr.wedge(gr.complete(3), 3, gr.complete(3), 1)
    assert w.n == 5 and w.num_edges == 6
    assert gr.add_isolated(g, 2).n == 5
    assert gr.remove_edge(gr.add_edge(g, 1, 3), 1, 3).key() == g.key()
    assert gr.induced_subgraph(gr.cycle(5), [1, 2, 3]).num_edges == 2


def test_diameter_disconnected():
    with pytest.raises(Disconnected):
        gr.diameter(gr.empty(2))
    assert gr.diameter(gr.cycle(7)) == 3


@given(graphs)
def test_invariants_against_networkx(g):
    h = to_nx(g)
    alpha = gr.independence_number(g)
    assert alpha == max(len(c) for c in nx.find_cliques(nx.complement(h)))
    assert gr.clique_number(g) == max(len(c) for c in nx.find_cliques(h))
    assert gr.is_chordal(g) == nx.is_chordal(h)
    assert alpha + gr.vertex_cover_number(g) == g.n


@given(graphs)
def test_complement_involution_and_join_law(g):
    assert gr.complement(gr.complement(g)).key() == g.key()
    h = random_graph(3, g.n)
    lhs = gr.complement(gr.join(g, h))
    rhs = gr.disjoint_union(gr.complement(g), gr.complement(h))
    assert lhs.key() == rhs.key()


@settings(max_examples=40)
@given(graphs)
def test_chromatic_and_clique_cover(g):
    chi = gr.chromatic_number(g)
    h = to_nx(g)
    assert chi >= gr.clique_number(g)
    # a proper colouring with chi colours exists and no smaller one does
    greedy = max(nx.greedy_color(h).values(), default=-1) + 1
    assert chi <= max(greedy, 0 if g.n == 0 else 1)
    assert gr.clique_cover_number(g) == gr.chromatic_number(gr.complement(g))


@settings(max_examples=40)
@given(graphs)
def test_mcn_matches_brute_force(g):
    # shortest induced cycle of length >= 4 in the complement
    c = gr.complement(g)
    hole = None
    for k in range(4, g.n + 1):
        for vs in combinations(range(1, g.n + 1), k):
            sub = nx.Graph(to_nx(c).subgraph(vs))
            if all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub):
                hole = k
                break
        if hole:
            break
    assert gr.mcn(g) == hole


@given(graphs, st.integers(0, 2**32))
def test_relabel_preserves_invariants(g, seed):
    perm = list(np.random.default_rng(seed).permutation(g.n) + 1)
    r = gr.relabel(g, perm)
    assert r.num_edges == g.num_edges
    assert gr.independence_number(r) == gr.independence_number(g)
    assert gr.is_chordal(r) == gr.is_chordal(g)


def test_json_roundtrip():
    g = gr.petersen()
    assert gr.graph_from_json(g.to_json()).key() == g.key()


def test_connected_covers():
    g = gr.complete(4)
    cov = gr.k_connected_edge_cover(g, 2)
    assert cov is not None and gr.is_k_connected_cover(g, cov)
    assert gr.min_k_connected_edge_cover(gr.path(4))[0] == 2
    assert gr.is_k_connected_cover(gr.cycle(6), gr.k_connected_edge_cover(gr.cycle(6), 3))
    assert gr.k_connected_edge_cover(gr.cycle(8), 4) is None
    assert not gr.is_edge_cover(gr.path(3), [(1, 2)])
