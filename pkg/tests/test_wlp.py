from __future__ import annotations

import math

import pytest

from msquared import graphs as gr
from msquared.errors import NotArtinian
from msquared.invariants import compute_ms
from msquared.quadspace import squares_ideal
from msquared.wlp import (
    has_wlp,
    is_lefschetz,
    ms_via_wlp_chain,
    multiplication_rank,
    socle_degree,
    squares_ms_formula,
)


def test_formula_values():
    for n in range(1, 200):
        assert squares_ms_formula(n) == math.ceil((2 * n + 1 - math.sqrt(8 * n + 1)) / 2 - 1e-9)
    with pytest.raises(ValueError):
        squares_ms_formula(0)


def test_socle_and_ranks():
    sq = squares_ideal(3)
    assert socle_degree(sq) == 3
    assert multiplication_rank(sq, [1, 1, 1], 1) == (3, (3, 3))
    assert multiplication_rank(sq, [1, 0, 0], 1)[0] == 2
    assert is_lefschetz(sq, [1, 1, 1])
    assert not is_lefschetz(sq, [1, 0, 0])
    with pytest.raises(NotArtinian):
        socle_degree(gr.edge_ideal(gr.complete(3)))


@pytest.mark.parametrize("n", range(2, 6))
def test_squares_chain_matches(n):
    sq = squares_ideal(n)
    assert has_wlp(sq)
    value, chain = ms_via_wlp_chain(sq)
    assert value == squares_ms_formula(n) == compute_ms(sq).sampled_value
    assert chain.all_verified
    assert chain.h2[0] == n * (n - 1) // 2 and chain.h2[-1] == 0


def test_chain_on_non_artinian():
    value, chain = ms_via_wlp_chain(gr.edge_ideal(gr.complete(3)))
    assert value == 1
    assert not chain.steps[0].wlp
    assert chain.to_json()[0]["i"] == 0
