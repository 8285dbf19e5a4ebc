"""Explicit witness forms for ms and cs on specific families.

Forms are returned as int64 arrays of shape (r, n) over the variables x1..xn.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import BadParams, CoverInvalid, WitnessInvalid
from .exactfield import DEFAULT_PRIME
from .graphs import Graph, clique_adjacent, edge_ideal, is_edge_cover
from .invariants import ms_check


def _forms(rows, n):
    out = np.zeros((len(rows), n), dtype=np.int64)
    for k, row in enumerate(rows):
        for j, c in row:
            out[k, j - 1] += c
    return out


def triangular_complete_witness(r: int) -> tuple:
    """r forms over t = r(r+1)/2 variables witnessing cs for the complete graph K_t.

    Each pair of forms shares one private variable (numbered in lex order of
    the pair), and form i also carries its own variable C(r,2) + i.
    """
    if r < 1:
        raise BadParams("need r >= 1")
    t = r * (r + 1) // 2
    shared = {pair: k + 1 for k, pair in enumerate(combinations(range(1, r + 1), 2))}
    base = r * (r - 1) // 2
    rows = []
    for i in range(1, r + 1):
        vars_i = [shared[(min(i, j), max(i, j))] for j in range(1, r + 1) if j != i]
        vars_i.append(base + i)
        rows.append([(v, 1) for v in sorted(vars_i)])
    return t, _forms(rows, t)


def squares_chain_witness(n: int) -> np.ndarray:
    if n < 2:
        raise BadParams("need n >= 2")
    return _forms([[(i, 1), (i + 1, 1)] for i in range(1, n)], n)


def odd_cycle_cs_witness(m: int) -> np.ndarray:
    """x1 + xi for 2 <= i <= 2m+1, on the cycle with 2m+1 vertices."""
    if m < 1:
        raise BadParams("need m >= 1")
    n = 2 * m + 1
    return _forms([[(1, 1), (i, 1)] for i in range(2, n + 1)], n)


_CYCLE_SIGNS = {0: (1, 1, 1), 1: (-1, -1, -1), 2: (-1, -1, 1), 3: (-1, 1, 1)}


def cycle_structured_witness(n: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """n-3 forms x_i +- x_{n-2} +- x_{n-1} +- x_n, signs set by i mod 4."""
    if n < 8:
        raise BadParams("need n >= 8")
    rows = []
    for i in range(1, n - 2):
        a, b, c = _CYCLE_SIGNS[i % 4]
        rows.append([(i, 1), (n - 2, a), (n - 1, b), (n, c)])
    return _forms(rows, n) % p


def edge_cover_witness(g: Graph, cover) -> np.ndarray:
    cover = [tuple(sorted(e)) for e in cover]
    if not is_edge_cover(g, cover):
        raise CoverInvalid("not an edge cover of the graph")
    for e, f in combinations(cover, 2):
        if not clique_adjacent(g, e, f):
            raise CoverInvalid(f"edges {e} and {f} are not clique-adjacent")
    return _forms([[(a, 1), (b, 1)] for a, b in cover], g.n)


def join_witness(forms_g, n_g: int, forms_h, n_h: int, g: Graph | None = None,
                 h: Graph | None = None, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Witness for the join from witnesses of both sides.

    The i-th form of each side is concatenated into one form on n_g + n_h
    variables; the shorter list is padded with zero forms.  When the graphs
    are given the inputs are validated first.
    """
    fg = np.asarray(forms_g, dtype=np.int64).reshape(-1, n_g)
    fh = np.asarray(forms_h, dtype=np.int64).reshape(-1, n_h)
    if g is not None and not ms_check(edge_ideal(g, p), fg):
        raise WitnessInvalid("first witness fails the ms check")
    if h is not None and not ms_check(edge_ideal(h, p), fh):
        raise WitnessInvalid("second witness fails the ms check")
    a = max(len(fg), len(fh))
    out = np.zeros((a, n_g + n_h), dtype=np.int64)
    out[:len(fg), :n_g] = fg
    out[:len(fh), n_g:] = fh
    return out % p


def wedge_complete_witness(m: int, n: int) -> np.ndarray:
    """x1..x_{m-1} and x_m + ... + x_{m+n-1} for K_m and K_n glued at vertex m."""
    if not 1 <= m <= n:
        raise BadParams("need 1 <= m <= n")
    total = m + n - 1
    rows = [[(i, 1)] for i in range(1, m)]
    rows.append([(j, 1) for j in range(m, total + 1)])
    return _forms(rows, total)


def sum_all_vars_witness(n: int) -> np.ndarray:
    if n < 1:
        raise BadParams("need n >= 1")
    return np.ones((1, n), dtype=np.int64)


def coordinate_witness(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


CONSTRUCTIONS = {
    "triangular": lambda r: triangular_complete_witness(r)[1],
    "squares-chain": squares_chain_witness,
    "odd-cycle": odd_cycle_cs_witness,
    "cycle-structured": cycle_structured_witness,
    "wedge-complete": wedge_complete_witness,
    "sum-all": sum_all_vars_witness,
}
