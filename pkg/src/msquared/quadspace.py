"""Degree-graded model of k[x1..xn]/I for an ideal I generated by quadrics.

Quadratic forms are coefficient vectors of length N = n(n+1)/2 over the
monomials x_i x_j (i <= j) in lex pair order.  A mixed coefficient is stored
in full, so (x1 + x2)^2 has a 2 at x1x2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from .errors import DimensionMismatch, OutOfRange, TooLarge
from .exactfield import DEFAULT_PRIME, rref

MAX_PIECE_COLS = 5000
MAX_PIECE_ENTRIES = 40_000_000


def num_quadrics(n: int) -> int:
    return n * (n + 1) // 2


def pair_index(i: int, j: int, n: int) -> int:
    """0-based position of x_i x_j (1-based i <= j) in lex pair order."""
    if not (1 <= i <= j <= n):
        raise OutOfRange(f"need 1 <= i <= j <= n, got ({i}, {j}, {n})")
    return (i - 1) * n - (i - 1) * (i - 2) // 2 + (j - i)


@lru_cache(maxsize=None)
def pair_table(n: int) -> np.ndarray:
    """Symmetric n x n array of 0-based pair indices."""
    t = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            t[i, j] = t[j, i] = pair_index(i + 1, j + 1, n)
    t.setflags(write=False)
    return t


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple:
    return tuple(combinations_with_replacement(range(1, n + 1), 2))


def _check_len(v, n):
    if len(v) != n:
        raise DimensionMismatch(f"expected length {n}, got {len(v)}")


def mul_lin_lin(a, b, p: int = DEFAULT_PRIME) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    if a.shape != b.shape:
        raise DimensionMismatch("forms have different lengths")
    n = a.size
    outer = np.outer(a, b) % p
    sym = (outer + outer.T) % p
    iu = np.triu_indices(n)
    q = sym[iu]
    diag = iu[0] == iu[1]
    q[diag] = outer[iu][diag]
    return q % p


def mul_lin_var(l, j: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    l = np.asarray(l, dtype=np.int64) % p
    n = l.size
    if not 1 <= j <= n:
        raise OutOfRange(f"variable {j} out of range 1..{n}")
    q = np.zeros(num_quadrics(n), dtype=np.int64)
    q[pair_table(n)[j - 1]] = l
    return q


def coordinate_form(n: int, j: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.int64)
    e[j - 1] = 1
    return e


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple:
    """Degree-d monomials as sorted 0-based variable tuples, lex order (x1^d first)."""
    return tuple(combinations_with_replacement(range(n), d))


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    return {m: k for k, m in enumerate(monomials(n, d))}


@lru_cache(maxsize=None)
def times_variable(n: int, d: int) -> np.ndarray:
    """Table t[k, j] = index in degree d+1 of (k-th degree-d monomial) * x_j."""
    idx = monomial_index(n, d + 1)
    mons = monomials(n, d)
    t = np.empty((len(mons), n), dtype=np.int64)
    for k, m in enumerate(mons):
        for j in range(n):
            t[k, j] = idx[tuple(sorted(m + (j,)))]
    t.setflags(write=False)
    return t


def monomial_name(m) -> str:
    if not m:
        return "1"
    out = []
    for v in sorted(set(m)):
        e = m.count(v)
        out.append(f"x{v + 1}" + (f"^{e}" if e > 1 else ""))
    return "*".join(out)


@dataclass
class GradedPiece:
    d: int
    monomials: tuple
    std: np.ndarray     # column indices of standard monomials
    pivots: np.ndarray  # column indices that are leading terms of the ideal
    tail: np.ndarray    # basis restricted to the standard columns
    basis: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return len(self.std)

    def reduce(self, v: np.ndarray, p: int) -> np.ndarray:
        """Coordinates on the standard monomials of the class of v (rows of v)."""
        v = np.atleast_2d(v)
        out = v[:, self.std]
        if len(self.pivots):
            out = out - v[:, self.pivots] @ self.tail
        return out % p


@dataclass(frozen=True, eq=False)
class QuadIdeal:
    """Degree-2 part I_2 of an ideal, as an RREF basis of quadratic forms."""

    n: int
    p: int
    basis: np.ndarray
    pivots: tuple

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    t = rank

    @property
    def N(self) -> int:
        return num_quadrics(self.n)

    @property
    def quotient_dim(self) -> int:
        return self.N - self.rank

    @cached_property
    def standard_pairs(self) -> np.ndarray:
        mask = np.ones(self.N, dtype=bool)
        mask[list(self.pivots)] = False
        return np.flatnonzero(mask)

    @cached_property
    def reducer(self) -> np.ndarray:
        """N x Q matrix sending a quadric to its coordinates in the quotient m^2/I_2."""
        std = self.standard_pairs
        red = np.zeros((self.N, len(std)), dtype=np.int64)
        red[std, np.arange(len(std))] = 1
        for r, c in enumerate(self.pivots):
            red[c] = (-self.basis[r, std]) % self.p
        return red

    @cached_property
    def is_monomial(self) -> bool:
        return bool(np.all((self.basis != 0).sum(axis=1) == 1))

    def contains(self, q) -> bool:
        q = np.asarray(q, dtype=np.int64) % self.p
        return not np.any((q @ self.reducer) % self.p)

    def generators(self) -> list:
        """Basis rows as lists of (i, j, coeff) with 1-based i <= j."""
        pairs = pair_list(self.n)
        return [[(*pairs[k], int(row[k])) for k in np.flatnonzero(row)] for row in self.basis]

    def to_json(self) -> dict:
        return {"n": self.n, "quadrics": [[list(x) for x in g] for g in self.generators()]}

    @cached_property
    def graded(self) -> "GradedRing":
        return GradedRing(self)

    def __repr__(self) -> str:
        return f"QuadIdeal(n={self.n}, t={self.rank}, p={self.p})"


def span_quad(forms, n: int, p: int = DEFAULT_PRIME) -> QuadIdeal:
    N = num_quadrics(n)
    rows = [np.asarray(f, dtype=np.int64) for f in forms]
    for r in rows:
        _check_len(r, N)
    m = np.array(rows, dtype=np.int64).reshape(len(rows), N) % p
    res = rref(m, p)
    return QuadIdeal(n, p, res.basis, res.pivots)


def monomial_ideal(n: int, pairs, p: int = DEFAULT_PRIME) -> QuadIdeal:
    forms = []
    for i, j in pairs:
        i, j = min(i, j), max(i, j)
        q = np.zeros(num_quadrics(n), dtype=np.int64)
        q[pair_index(i, j, n)] = 1
        forms.append(q)
    return span_quad(forms, n, p)


def squares_ideal(n: int, p: int = DEFAULT_PRIME) -> QuadIdeal:
    return monomial_ideal(n, [(i, i) for i in range(1, n + 1)], p)


def ideal_from_json(data, p: int = DEFAULT_PRIME) -> QuadIdeal:
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    forms = []
    for quad in data["quadrics"]:
        q = np.zeros(num_quadrics(n), dtype=np.int64)
        for i, j, c in quad:
            i, j = min(i, j), max(i, j)
            q[pair_index(i, j, n)] += int(c)
        forms.append(q % p)
    return span_quad(forms, n, p)


def substitution_matrix(l, p: int) -> tuple:
    """Solve l = 0 for its leading variable x_k.

    Returns (k, S) where S is n x (n-1) with x_i -> sum_j S[i, j] y_j and the
    y's are the remaining variables in order.
    """
    l = np.asarray(l, dtype=np.int64) % p
    nz = np.flatnonzero(l)
    if nz.size == 0:
        raise ValueError("cannot quotient by the zero form")
    k = int(nz[0])
    n = l.size
    keep = [i for i in range(n) if i != k]
    s = np.zeros((n, n - 1), dtype=np.int64)
    s[keep, np.arange(n - 1)] = 1
    inv = pow(int(l[k]), -1, p)
    s[k] = (-l[keep] * inv) % p
    return k, s


def quotient_by_form(ideal: QuadIdeal, l) -> QuadIdeal:
    """The degree-2 ideal of R/(l), written in the n-1 surviving variables."""
    p, n = ideal.p, ideal.n
    _, s = substitution_matrix(l, p)
    pairs = pair_list(n)
    m = n - 1
    # image of each old monomial x_a x_b under the substitution
    images = np.zeros((len(pairs), num_quadrics(m)), dtype=np.int64)
    for k, (a, b) in enumerate(pairs):
        images[k] = mul_lin_lin(s[a - 1], s[b - 1], p)
    new =ideal.basis @ images % p if ideal.rank else np.zeros((0, num_quadrics(m)), dtype=np.int64)
    return span_quad(list(new), m, p)


class GradedRing:
    """Lazily computed graded pieces of k[x]/(I_2)."""

    def __init__(self, ideal: QuadIdeal):
        self.ideal = ideal
        self._pieces: dict = {}

    def piece(self, d: int) -> GradedPiece:
        if d < 0:
            raise OutOfRange("degree must be >= 0")
        if d not in self._pieces:
            self._pieces[d] = self._build(d)
        return self._pieces[d]

    def _empty(self, d):
        mons = monomials(self.ideal.n, d)
        z = np.zeros(0, dtype=np.int64)
        return GradedPiece(d, mons, np.arange(len(mons)), z, np.zeros((0, len(mons)), dtype=np.int64))

    def _full(self, d):
        mons = monomials(self.ideal.n, d)
        z = np.zeros(0, dtype=np.int64)
        return GradedPiece(d, mons, z, np.arange(len(mons)), np.zeros((len(mons), 0), dtype=np.int64))

    def _build(self, d: int) -> GradedPiece:
        I = self.ideal
        n, p = I.n, I.p
        if d < 2 or I.rank == 0:
            return self._empty(d)
        if d > 2 and self.piece(d - 1).dim == 0:
            return self._full(d)
        cols = comb(n + d - 1, d)
        if cols > MAX_PIECE_COLS:
            raise TooLarge(f"degree {d} piece in {n} variables has {cols} monomials")
        mons = monomials(n, d)
        if I.is_monomial:
            return self._monomial_piece(d, mons)
        if d == 2:
            basis = I.basis
            pivots = np.array(I.pivots, dtype=np.int64)
        else:
            prev = self.piece(d - 1)
            if prev.basis is None:
                raise RuntimeError("missing basis for previous degree")
            rows = prev.basis.shape[0] * n
            if rows * cols > MAX_PIECE_ENTRIES:
                raise TooLarge(f"degree {d} ideal matrix would be {rows} x {cols}")
            table = times_variable(n, d - 1)
            m = np.zeros((rows, cols), dtype=np.int64)
            r0 = prev.basis.shape[0]
            for j in range(n):
                m[j * r0:(j + 1) * r0][:, table[:, j]] = prev.basis
            res = rref(m, p)
            basis = res.basis
            pivots = np.array(res.pivots, dtype=np.int64)
        mask = np.ones(cols, dtype=bool)
        mask[pivots] = False
        std = np.flatnonzero(mask)
        tail = basis[:, std] if len(pivots) else np.zeros((0, len(std)), dtype=np.int64)
        return GradedPiece(d, mons, std, pivots, tail, basis)

    def _monomial_piece(self, d, mons):
        gens = [(g[0][0] - 1, g[0][1] - 1) for g in self.ideal.generators()]
        n = self.ideal.n
        std, piv = [], []
        for k, m in enumerate(mons):
            cnt = [0] * n
            for v in m:
                cnt[v] += 1
            hit = any((cnt[a] >= 2) if a == b else (cnt[a] and cnt[b]) for a, b in gens)
            (piv if hit else std).append(k)
        std = np.array(std, dtype=np.int64)
        piv = np.array(piv, dtype=np.int64)
        # for a monomial ideal every pivot row is a unit vector with no tail
        return GradedPiece(d, mons, std, piv, np.zeros((len(piv), len(std)), dtype=np.int64))

    def hilbert(self, dmax: int) -> list:
        return [self.piece(d).dim for d in range(dmax + 1)]


def graded_piece_basis(ideal: QuadIdeal, d: int) -> list:
    """Standard monomials of degree d, as sorted 1-based variable tuples."""
    pc = ideal.graded.piece(d)
    return [tuple(v + 1 for v in pc.monomials[k]) for k in pc.std]


def hilbert_function(ideal: QuadIdeal, dmax: int) -> list:
    if dmax < 0:
        raise OutOfRange("dmax must be >= 0")
    return ideal.graded.hilbert(dmax)
