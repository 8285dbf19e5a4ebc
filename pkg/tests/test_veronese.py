from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from msquared.errors import BadParams, TooLarge
from msquared.veronese import (
    best_snd,
    is_complete,
    lower_bound,
    min_doubling_set,
    snd_construction,
    sqrt_upper_bound,
    veronese_cs_bounds,
)


def brute_min(n):
    for k in range(1, n + 2):
        for s in combinations(range(n + 1), k):
            if is_complete(s, n):
                return k


def test_examples():
    assert is_complete((0, 1, 3, 4), 4)
    assert not is_complete((0, 1, 4), 4)
    assert not is_complete((0, 5), 4)
    assert snd_construction(10, 3).members == (0, 1, 2, 3, 6, 7, 8, 9, 10)


@pytest.mark.parametrize("n", range(1, 15))
def test_minimum_matches_brute_force(n):
    size, ds = min_doubling_set(n)
    assert ds.complete and ds.size == size
    assert size == brute_min(n)


@given(st.integers(1, 400))
def test_sandwich(n):
    assert lower_bound(n) <= best_snd(n).size <= sqrt_upper_bound(n)
    assert best_snd(n).complete


@given(st.integers(1, 40), st.integers(1, 40))
def test_snd_always_complete(n, d):
    if d <= n:
        assert snd_construction(n, d).complete


def test_bounds_record():
    b = veronese_cs_bounds(20)
    assert b["lower"] <= b["exact"] <= b["upper"] and b["ms"] == 2
    assert is_complete(b["set"], 20)
    big = veronese_cs_bounds(100)
    assert big["exact"] is None and big["lower"] <= big["upper"]
    with pytest.raises(TooLarge):
        min_doubling_set(41)
    with pytest.raises(BadParams):
        min_doubling_set(0)
