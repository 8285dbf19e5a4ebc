"""Multiplication maps by linear forms on Artinian quotients, WLP tests and Hilbert chains."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotArtinian
from .exactfield import FieldCtx, random_vector, rref
from .quadspace import QuadIdeal, quotient_by_form, times_variable

_WLP_STREAM = 3 << 56


def multiplication_rank(ideal: QuadIdeal, l, d: int) -> tuple:
    """Rank of  . l : [R]_d -> [R]_{d+1}  in standard-monomial bases, with the two dimensions."""
    p, n = ideal.p, ideal.n
    l = np.asarray(l, dtype=np.int64) % p
    src = ideal.graded.piece(d)
    dst = ideal.graded.piece(d + 1)
    dims = (src.dim, dst.dim)
    if src.dim == 0 or dst.dim == 0 or not l.any():
        return 0, dims
    table = times_variable(n, d)
    m = np.zeros((src.dim, len(dst.monomials)), dtype=np.int64)
    rows = np.arange(src.dim)
    for j in np.flatnonzero(l):
        m[rows, table[src.std, j]] += l[j]
    img = dst.reduce(m % p, p)
    return rref(img, p).rank, dims


def socle_degree(ideal: QuadIdeal) -> int:
    """Top nonzero degree; quadratic Artinian quotients stop by degree n."""
    g = ideal.graded
    for d in range(ideal.n + 2):
        if g.piece(d).dim == 0:
            return d - 1
    raise NotArtinian("Hilbert function does not vanish by degree n + 1")


def is_lefschetz(ideal: QuadIdeal, l, top: int | None = None) -> bool:
    top = socle_degree(ideal) if top is None else top
    for d in range(top):
        rk, (a, b) = multiplication_rank(ideal, l, d)
        if rk != min(a, b):
            return False
    return True


def has_wlp(ideal: QuadIdeal, trials: int = 5, ctx: FieldCtx | None = None) -> bool:
    """True when one of ``trials`` random forms has maximal rank in every degree."""
    ctx = ctx or FieldCtx(ideal.p)
    top = socle_degree(ideal)
    if ideal.n == 0:
        return True
    for k in range(trials):
        l = random_vector(ctx, ideal.n, _WLP_STREAM + k)
        if is_lefschetz(ideal, l, top):
            return True
    return False


@dataclass
class ChainStep:
    i: int
    hilbert: list
    wlp: bool


@dataclass
class HilbertChain:
    steps: list = field(default_factory=list)

    @property
    def h2(self) -> list:
        return [s.hilbert[2] if len(s.hilbert) > 2 else 0 for s in self.steps]

    @property
    def all_verified(self) -> bool:
        return all(s.wlp for s in self.steps)

    def to_json(self) -> list:
        return [{"i": s.i, "h": s.hilbert, "wlp": s.wlp} for s in self.steps]


def ms_via_wlp_chain(ideal: QuadIdeal, trials: int = 5, ctx: FieldCtx | None = None) -> tuple:
    """Cut by general forms until the degree-2 piece dies; return (steps, chain).

    The step count equals ms only when every recorded WLP flag is true.  A
    non-Artinian ring in the chain is walked through with its flag set false,
    since the property is only defined for Artinian rings.
    """
    ctx = ctx or FieldCtx(ideal.p)
    chain = HilbertChain()
    ring = ideal
    i = 0
    while True:
        try:
            top = socle_degree(ring)
        except NotArtinian:
            top = None
        h = ring.graded.hilbert(2 if top is None else max(top + 1, 2))
        if h[2] == 0:
            chain.steps.append(ChainStep(i, h, top is not None and has_wlp(ring, trials, ctx)))
            return i, chain
        chosen, ok = None, False
        for k in range(trials):
            chosen = random_vector(ctx, ring.n, _WLP_STREAM + (i << 20) + k)
            if top is not None and is_lefschetz(ring, chosen, top):
                ok = True
                break
        chain.steps.append(ChainStep(i, h, ok))
        ring = quotient_by_form(ring, chosen)
        i += 1


def squares_ms_formula(n: int) -> int:
    """ceil((2n + 1 - sqrt(8n + 1)) / 2) in integer arithmetic."""
    if n < 1:
        raise ValueError("need n >= 1")
    k = 0
    while True:
        gap = 2 * n + 1 - 2 * k
        if gap <= 0 or gap * gap <= 8 * n + 1:
            return k
        k += 1
