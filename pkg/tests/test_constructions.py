from __future__ import annotations

import numpy as np
import pytest

from msquared import graphs as gr
from msquared.constructions import (
    CONSTRUCTIONS,
    cycle_structured_witness,
    edge_cover_witness,
    join_witness,
    odd_cycle_cs_witness,
    squares_chain_witness,
    sum_all_vars_witness,
    triangular_complete_witness,
    wedge_complete_witness,
)
from msquared.errors import BadParams, CoverInvalid, WitnessInvalid
from msquared.invariants import compute_ms, cs_check, ms_check
from msquared.quadspace import squares_ideal


@pytest.mark.parametrize("r", range(1, 6))
def test_triangular(r):
    t, forms = triangular_complete_witness(r)
    assert forms.shape == (r, t)
    assert cs_check(gr.edge_ideal(gr.complete(t)), forms)


@pytest.mark.parametrize("n", range(2, 8))
def test_squares_chain(n):
    assert cs_check(squares_ideal(n), squares_chain_witness(n))
    assert not cs_check(squares_ideal(n), squares_chain_witness(n)[:-1])


@pytest.mark.parametrize("m", range(1, 5))
def test_odd_cycle(m):
    assert cs_check(gr.edge_ideal(gr.cycle(2 * m + 1)), odd_cycle_cs_witness(m))


@pytest.mark.parametrize("n", range(8, 13))
def test_cycle_structured(n):
    w = cycle_structured_witness(n)
    assert w.shape == (n - 3, n)
    assert ms_check(gr.edge_ideal(gr.cycle(n)), w)


def test_edge_cover():
    g = gr.petersen()
    w = edge_cover_witness(g, gr.petersen_spokes())
    assert ms_check(gr.edge_ideal(g), w)
    assert not cs_check(gr.edge_ideal(g), w)
    with pytest.raises(CoverInvalid):
        edge_cover_witness(gr.cycle(8), [(1, 2), (3, 4), (5, 6), (7, 8)])
    with pytest.raises(CoverInvalid):
        edge_cover_witness(gr.path(3), [(1, 2)])


def test_join():
    g, h = gr.cycle(5), gr.path(3)
    wg = np.array(compute_ms(gr.edge_ideal(g)).witness)
    wh = np.array(compute_ms(gr.edge_ideal(h)).witness)
    w = join_witness(wg, 5, wh, 3, g, h)
    assert w.shape == (max(len(wg), len(wh)), 8)
    assert ms_check(gr.edge_ideal(gr.join(g, h)), w)
    with pytest.raises(WitnessInvalid):
        join_witness(wg[:1], 5, wh, 3, g, h)


@pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (3, 3), (3, 5)])
def test_wedge_complete(m, n):
    g = gr.wedge(gr.complete(m), m, gr.complete(n), 1)
    assert ms_check(gr.edge_ideal(g), wedge_complete_witness(m, n))


def test_sum_all_vars_on_complete():
    assert ms_check(gr.edge_ideal(gr.complete(5)), sum_all_vars_witness(5))


def test_registry_and_params():
    assert set(CONSTRUCTIONS) >= {"triangular", "squares-chain", "odd-cycle"}
    with pytest.raises(BadParams):
        cycle_structured_witness(7)
    with pytest.raises(BadParams):
        triangular_complete_witness(0)
