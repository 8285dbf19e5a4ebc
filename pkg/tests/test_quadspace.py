from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from msquared.errors import DimensionMismatch, OutOfRange
from msquared.graphs import cycle, edge_ideal, from_edges
from msquared.quadspace import (
    graded_piece_basis,
    hilbert_function,
    ideal_from_json,
    monomial_ideal,
    mul_lin_lin,
    mul_lin_var,
    num_quadrics,
    pair_index,
    pair_list,
    quotient_by_form,
    span_quad,
    squares_ideal,
)

P = 32003


def test_pair_index():
    assert pair_index(1, 1, 3) == 0
    assert pair_index(2, 2, 3) == 3
    assert pair_index(3, 3, 3) == 5
    with pytest.raises(OutOfRange):
        pair_index(2, 1, 3)
    for n in range(1, 7):
        idx = [pair_index(i, j, n) for i, j in pair_list(n)]
        assert idx == list(range(num_quadrics(n)))


def test_products():
    x1 = [1, 0, 0]
    assert mul_lin_lin(x1, x1).tolist() == [1, 0, 0, 0, 0, 0]
    assert mul_lin_lin([1, 1], [1, 1]).tolist() == [1, 2, 1]
    assert mul_lin_var([1, 1, 0], 1).tolist() == [1, 1, 0, 0, 0, 0]
    assert mul_lin_var([0, 0, 1], 3).tolist() == [0, 0, 0, 0, 0, 1]
    with pytest.raises(DimensionMismatch):
        mul_lin_lin([1, 0], [1, 0, 0])
    with pytest.raises(OutOfRange):
        mul_lin_var([1, 0], 3)


forms3 = st.lists(st.integers(0, P - 1), min_size=4, max_size=4)


@given(forms3, forms3, forms3)
def test_bilinear_symmetric(a, b, c):
    a, b, c = map(np.array, (a, b, c))
    assert np.array_equal(mul_lin_lin(a, b), mul_lin_lin(b, a))
    assert np.array_equal(mul_lin_lin((a + b) % P, c), (mul_lin_lin(a, c) + mul_lin_lin(b, c)) % P)
    e2 = np.array([0, 1, 0, 0])
    assert np.array_equal(mul_lin_var(a, 2), mul_lin_lin(a, e2))


def test_span_examples():
    k3 = monomial_ideal(3, [(1, 2), (1, 3), (2, 3)])
    assert (k3.rank, k3.quotient_dim) == (3, 3)
    z = span_quad([], 3)
    assert (z.rank, z.quotient_dim) == (0, 6)
    full = monomial_ideal(3, pair_list(3))
    assert full.quotient_dim == 0


@given(st.integers(1, 7), st.integers(0, 2**32))
def test_edge_ideal_quotient_dim(n, seed):
    rng = np.random.default_rng(seed)
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
    g = from_edges(n, edges)
    assert edge_ideal(g).quotient_dim == num_quadrics(n) - len(edges)


def test_graded_piece_examples():
    sq = squares_ideal(3)
    assert graded_piece_basis(sq, 3) == [(1, 2, 3)]
    assert graded_piece_basis(sq, 4) == []
    assert hilbert_function(sq, 3) == [1, 3, 3, 1]
    c4 = edge_ideal(cycle(4))
    assert graded_piece_basis(c4, 2) == [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3), (4, 4)]
    assert hilbert_function(c4, 3)[2] == 6
    assert hilbert_function(monomial_ideal(2, pair_list(2)), 4) == [1, 2, 0, 0, 0]
    assert graded_piece_basis(sq, 1) == [(1,), (2,), (3,)]


def _brute_standard(n, d, gens):
    out = []
    for m in combinations_with_replacement(range(1, n + 1), d):
        hit = False
        for a, b in gens:
            if a == b and m.count(a) >= 2 or a != b and a in m and b in m:
                hit = True
        if not hit:
            out.append(m)
    return out


@given(st.integers(1, 5), st.integers(0, 5), st.integers(0, 2**32))
def test_monomial_pieces_brute_force(n, d, seed):
    rng = np.random.default_rng(seed)
    gens = [m for m in pair_list(n) if rng.random() < 0.4]
    I = monomial_ideal(n, gens)
    assert graded_piece_basis(I, d) == _brute_standard(n, d, gens)


@given(st.integers(2, 4), st.integers(0, 2**32))
def test_general_path_agrees_with_monomial_after_scaling(n, seed):
    # scaling generators keeps a monomial ideal; adding a redundant combination
    # forces the general elimination path, which must agree
    rng = np.random.default_rng(seed)
    gens = [m for m in pair_list(n) if rng.random() < 0.5]
    I = monomial_ideal(n, gens)
    rows = list(I.basis)
    if rows:
        combo = sum(int(rng.integers(1, P)) * r for r in rows) % P
        rows[0] = (rows[0] + combo) % P
    J = span_quad(rows, n)
    for d in range(5):
        assert hilbert_function(J, d) == hilbert_function(I, d)


@given(st.integers(1, 5), st.integers(0, 2**32))
def test_hilbert_bounds(n, seed):
    rng = np.random.default_rng(seed)
    t = int(rng.integers(0, num_quadrics(n) + 1))
    I = span_quad(list(rng.integers(0, P, size=(t, num_quadrics(n)))), n)
    h = hilbert_function(I, 4)
    assert h[0] == 1 and h[1] == n
    for d, v in enumerate(h):
        assert 0 <= v <= comb(n + d - 1, d)


def test_json_roundtrip():
    I = ideal_from_json({"n": 3, "quadrics": [[[1, 1, 1], [1, 2, 3]], [[2, 3, -1]]]})
    J = ideal_from_json(I.to_json())
    assert np.array_equal(I.basis, J.basis)
    assert I.rank == 2


def test_quotient_by_form_squares():
    I = squares_ideal(3)
    assert hilbert_function(quotient_by_form(I, [1, 1, 1]), 3) == [1, 2, 0, 0]
    # quotient by a variable just deletes it
    Q = quotient_by_form(squares_ideal(4), [0, 1, 0, 0])
    assert hilbert_function(Q, 4) == hilbert_function(squares_ideal(3), 4)
