"""Arithmetic over GF(p) with numpy int64 arrays, plus stateless seeded randomness.

Matrices are plain 2-D ``np.int64`` arrays with entries in [0, p).  The prime is
kept below 2**31 so that a product of two residues never overflows int64.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import CharTwoDisallowed, NotPrime, OutOfRange

DEFAULT_PRIME = 32003
MAX_PRIME = 2**31 - 1
_INVERSE_TABLE_LIMIT = 1 << 22

_MASK64 = (1 << 64) - 1
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """The prime field GF(p) together with a master seed for random streams."""

    p: int = DEFAULT_PRIME
    master_seed: int = 0
    allow_char_2: bool = False

    @cached_property
    def inverses(self) -> np.ndarray | None:
        # lookup table of inverses, index 0 maps to 0 (harmless for dead rows)
        if self.p > _INVERSE_TABLE_LIMIT:
            return None
        return inverse_table(self.p)

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def inv_array(self, a: np.ndarray) -> np.ndarray:
        table = self.inverses
        if table is not None:
            return table[a]
        return pow_array(a, self.p - 2, self.p)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, seed={self.master_seed})"


def make_field(p: int = DEFAULT_PRIME, seed: int = 0, allow_char_2: bool = False) -> FieldCtx:
    if p < 2 or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2 and not allow_char_2:
        raise CharTwoDisallowed("characteristic 2 needs allow_char_2=True")
    if p > MAX_PRIME:
        raise OutOfRange(f"p must be below 2**31, got {p}")
    return FieldCtx(p, int(seed) & _MASK64, allow_char_2)


def inverse_table(p: int) -> np.ndarray:
    # a^(p-2) for every residue, vectorized
    return pow_array(np.arange(p, dtype=np.int64), p - 2, p)


def pow_array(a: np.ndarray, e: int, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64) % p
    out = np.ones_like(a)
    while e:
        if e & 1:
            out = out * a % p
        a = a * a % p
        e >>= 1
    return out


class RREF(NamedTuple):
    rank: int
    basis: np.ndarray
    pivots: tuple


def as_matrix(m, p: int, cols: int | None = None) -> np.ndarray:
    a = np.array(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(0 if a.size == 0 else 1, -1) if cols is None else a.reshape(-1, cols)
    if a.size == 0 and cols is not None:
        a = a.reshape(0, cols)
    return a % p


def rref(m, p: int) -> RREF:
    """Reduced row-echelon form mod p; pivots are the first nonzero column scanned."""
    a = as_matrix(m, p).copy()
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r, c:] = a[r, c:] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return RREF(r, a[:r].copy(), tuple(pivots))


def rank(m, p: int) -> int:
    return rref(m, p).rank


def batched_full_column_rank(a: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    """For a stack of matrices of shape (B, m, k), report which have rank k.

    Gaussian elimination runs on all B matrices at once.  A matrix dies the
    first time a column has no pivot, so for live matrices the pivot row of
    column c is always c.
    """
    p = ctx.p
    a = np.asarray(a, dtype=np.int64) % p
    b, m, k = a.shape
    if k == 0:
        return np.ones(b, dtype=bool)
    if m < k:
        return np.zeros(b, dtype=bool)
    a = a.copy()
    alive = np.ones(b, dtype=bool)
    idx = np.arange(b)
    for c in range(k):
        nz = a[:, c:, c] != 0
        alive &= nz.any(axis=1)
        piv = nz.argmax(axis=1) + c
        swap = piv != c
        if swap.any():
            s = idx[swap]
            top = a[s, c].copy()
            a[s, c] = a[s, piv[swap]]
            a[s, piv[swap]] = top
        inv = ctx.inv_array(a[:, c, c])
        a[:, c, c:] = a[:, c, c:] * inv[:, None] % p
        if c + 1 < m:
            f = a[:, c + 1:, c]
            a[:, c + 1:, c:] = (a[:, c + 1:, c:] - f[:, :, None] * a[:, None, c, c:]) % p
    return alive


def _splitmix64(x: np.ndarray) -> np.ndarray:
    x = x + _GOLDEN
    x = (x ^ (x >> np.uint64(30))) * _MIX1
    x = (x ^ (x >> np.uint64(27))) * _MIX2
    return x ^ (x >> np.uint64(31))


def stream_keys(seed: int, streams) -> np.ndarray:
    s = np.asarray(streams, dtype=np.uint64)
    return _splitmix64(np.uint64(seed & _MASK64) ^ _splitmix64(s))


def random_block(ctx: FieldCtx, streams, count: int) -> np.ndarray:
    """Rows of ``count`` residues, one row per stream id; stateless in (seed, stream)."""
    keys = stream_keys(ctx.master_seed, np.atleast_1d(streams))
    ctr = np.arange(count, dtype=np.uint64)
    with np.errstate(over="ignore"):
        raw = _splitmix64(keys[:, None] + ctr[None, :] * _GOLDEN)
    return (raw % np.uint64(ctx.p)).astype(np.int64)


def random_vector(ctx: FieldCtx, n: int, stream: int) -> np.ndarray:
    if n < 1:
        raise OutOfRange("need n >= 1")
    return random_block(ctx, [stream], n)[0]


def random_forms(ctx: FieldCtx, streams, r: int, n: int) -> np.ndarray:
    """Array of shape (len(streams), r, n): r random linear forms per stream."""
    streams = np.atleast_1d(streams)
    return random_block(ctx, streams, r * n).reshape(len(streams), r, n)
