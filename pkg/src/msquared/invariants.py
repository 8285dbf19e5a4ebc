"""Witness checks, analytic bounds and certified searches for ms and cs.

A list of linear forms L witnesses ms when L * m contains every quadric
modulo I_2, and cs when the products of pairs from L do.  Both checks are
rank tests in the quotient m^2 / I_2 of dimension Q = N - t.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import DimensionMismatch, OutOfRange, TooLarge
from .exactfield import DEFAULT_PRIME, FieldCtx, batched_full_column_rank, make_field, random_forms
from .quadspace import QuadIdeal, pair_table

KINDS = ("ms", "cs")
_KIND_CODE = {"ms": 1, "cs": 2}
EXHAUSTIVE_MAX_N = 5
EXHAUSTIVE_MAX_SUBSPACES = 2_000_000


def product_tensor(ideal: QuadIdeal) -> np.ndarray:
    """T[i, j] = quotient coordinates of x_i x_j, shape (n, n, Q)."""
    return ideal.reducer[pair_table(ideal.n)]


def as_forms(L, n: int, p: int) -> np.ndarray:
    a = np.asarray(L, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    a = np.atleast_2d(a)
    if a.shape[1] != n:
        raise DimensionMismatch(f"forms have {a.shape[1]} coefficients, ideal has n = {n}")
    return a % p


def ms_rows(forms: np.ndarray, T: np.ndarray, p: int) -> np.ndarray:
    """Quotient images of l * x_j for a batch of form lists, shape (B, r*n, Q)."""
    b, r, n = forms.shape
    u = np.einsum("bri,ijq->brjq", forms, T) % p
    return u.reshape(b, r * n, T.shape[2])


def cs_rows(forms: np.ndarray, T: np.ndarray, p: int) -> np.ndarray:
    """Quotient images of l_a * l_b (a <= b), shape (B, r(r+1)/2, Q)."""
    b, r, n = forms.shape
    u = np.einsum("bai,ijq->bajq", forms, T) % p
    v = np.einsum("bcj,bajq->bacq", forms, u) % p
    ia, ib = np.triu_indices(r)
    return v[:, ia, ib, :]


def _batch_check(kind, ideal, forms, T, ctx):
    if ideal.quotient_dim == 0:
        return np.ones(forms.shape[0], dtype=bool)
    if forms.shape[1] == 0:
        return np.zeros(forms.shape[0], dtype=bool)
    rows = ms_rows(forms, T, ctx.p) if kind == "ms" else cs_rows(forms, T, ctx.p)
    return batched_full_column_rank(rows, ctx)


def _ctx_for(ideal, ctx=None):
    if ctx is None or ctx.p != ideal.p:
        return FieldCtx(ideal.p, 0 if ctx is None else ctx.master_seed)
    return ctx


def ms_check(ideal: QuadIdeal, L) -> bool:
    forms = as_forms(L, ideal.n, ideal.p)
    return bool(_batch_check("ms", ideal, forms[None], product_tensor(ideal), _ctx_for(ideal))[0])


def cs_check(ideal: QuadIdeal, L) -> bool:
    forms = as_forms(L, ideal.n, ideal.p)
    return bool(_batch_check("cs", ideal, forms[None], product_tensor(ideal), _ctx_for(ideal))[0])


def check(kind: str, ideal: QuadIdeal, L) -> bool:
    return ms_check(ideal, L) if kind == "ms" else cs_check(ideal, L)


# -- analytic bounds ------------------------------------------------------


def _ceil_div(a, b):
    return -(-a // b)


def smallest_triangular_index(q: int) -> int:
    """Least r >= 0 with r(r+1)/2 >= q, i.e. ceil((sqrt(8q+1) - 1)/2)."""
    r = (isqrt(8 * q + 1) - 1) // 2
    while r * (r + 1) // 2 < q:
        r += 1
    return r


def ms_lower_bound(ideal: QuadIdeal, alpha_hint: int | None = None) -> tuple:
    q, n = ideal.quotient_dim, ideal.n
    if q == 0:
        return 0, [{"name": "m^2 inside I (t = N)", "value": 0}]
    count = _ceil_div(q, n)
    used = [{"name": "generator count ceil((N-t)/n)", "value": count}]
    best = count
    if alpha_hint is not None:
        used.append({"name": "dimension (alpha hint)", "value": int(alpha_hint)})
        best = max(best, int(alpha_hint))
    return best, used


def cs_lower_bound(ideal: QuadIdeal, alpha_hint: int | None = None, counting_only: bool = False) -> tuple:
    q, n, t = ideal.quotient_dim, ideal.n, ideal.rank
    best, used = ms_lower_bound(ideal, alpha_hint)
    if q == 0:
        return 0, used
    tri = smallest_triangular_index(q)
    used.append({"name": "pair-product count r(r+1)/2 >= N-t", "value": tri})
    best = max(best, tri)
    if t <= n - 1 and not counting_only:
        used.append({"name": "few quadrics (t <= n-1) forces cs = n", "value": n})
        best = max(best, n)
    return best, used


def ms_upper_bound(ideal: QuadIdeal) -> tuple:
    q, n = ideal.quotient_dim, ideal.n
    if q == 0:
        return 0, [{"name": "m^2 inside I (t = N)", "value": 0}]
    r = 0
    while not q < (r + 1) * (r + 2) // 2:
        r += 1
    v = min(r, n)
    return v, [{"name": "N-t < (r+1)(r+2)/2 over an infinite field", "value": r},
               {"name": "all variables", "value": n}]


# -- reports ---------------------------------------------------------------


@dataclass
class Certification:
    mode: str
    prime: int
    trials_per_level: int | None = None
    per_trial_failure_bound: Fraction | None = None
    levels_excluded: list = field(default_factory=list)

    def to_json(self) -> dict:
        b = self.per_trial_failure_bound
        return {
            "mode": self.mode,
            "p": self.prime,
            "T": self.trials_per_level,
            "bound": None if b is None else f"{b.numerator}/{b.denominator}",
            "levels_excluded": [list(x) for x in self.levels_excluded],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Certification":
        b = d.get("bound")
        return cls(d["mode"], int(d["p"]), d.get("T"), None if b is None else Fraction(b),
                   [tuple(x) for x in d.get("levels_excluded", [])])


@dataclass
class InvariantReport:
    kind: str
    n: int
    lo: int
    hi: int
    witness: list | None
    certification: Certification
    bounds_used: list = field(default_factory=list)

    @property
    def value(self) -> int | None:
        """The invariant, when the bounds closed (proved upper and lower)."""
        return self.lo if self.lo == self.hi else None

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def sampled_value(self) -> int | None:
        """First witnessed level; every lower level failed all its random trials.

        Equals ``value`` when exact.  Otherwise it is the invariant up to the
        failure probability recorded in the certification.
        """
        if self.exact:
            return self.value
        if self.witness is None:
            return None
        return self.hi

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "value": self.value,
            "lo": self.lo,
            "hi": self.hi,
            "witness": self.witness,
            "certification": self.certification.to_json(),
            "bounds_used": self.bounds_used,
        }

    @classmethod
    def from_json(cls, d: dict) -> "InvariantReport":
        return cls(d["kind"], int(d["n"]), int(d["lo"]), int(d["hi"]), d.get("witness"),
                   Certification.from_json(d["certification"]), list(d.get("bounds_used", [])))

    def revalidate(self, ideal: QuadIdeal) -> bool:
        if self.witness is None:
            return True
        return len(self.witness) == self.hi and check(self.kind, ideal, self.witness)


@dataclass
class SearchConfig:
    trials: int = 50
    alpha_hint: int | None = None
    mode: str = "randomized"
    prime: int = DEFAULT_PRIME
    seed: int = 0
    batch: int = 512

    def field(self) -> FieldCtx:
        return make_field(self.prime, self.seed, allow_char_2=self.prime == 2)


def stream_id(kind: str, level: int, trial: int) -> int:
    return (_KIND_CODE[kind] << 56) | (level << 40) | trial


def failure_bound(kind: str, ideal: QuadIdeal) -> Fraction | None:
    deg = ideal.N if kind == "ms" else 2 * ideal.N
    b = Fraction(deg, ideal.p)
    return b if b < 1 else None


def sample_level(kind, ideal, r, ctx, start, count, T=None, batch=512):
    """Yield (trial, forms) for every witnessing trial in [start, start+count)."""
    T = product_tensor(ideal) if T is None else T
    end = start + count
    lo = start
    while lo < end:
        hi = min(end, lo + batch)
        trials = np.arange(lo, hi, dtype=np.int64)
        streams = [stream_id(kind, r, int(x)) for x in trials]
        forms = random_forms(ctx, streams, r, ideal.n)
        ok = _batch_check(kind, ideal, forms, T, ctx)
        for k in np.flatnonzero(ok):
            yield int(trials[k]), forms[k]
        lo = hi


def compute(kind: str, ideal: QuadIdeal, config: SearchConfig | None = None) -> InvariantReport:
    if kind not in KINDS:
        raise ValueError(f"kind must be ms or cs, not {kind!r}")
    cfg = config or SearchConfig(prime=ideal.p)
    if cfg.trials < 1:
        raise OutOfRange("trials must be >= 1")
    if cfg.prime != ideal.p:
        raise DimensionMismatch(f"config prime {cfg.prime} differs from ideal prime {ideal.p}")
    if cfg.mode == "exhaustive":
        return _compute_exhaustive(kind, ideal, cfg)
    if cfg.mode != "randomized":
        raise ValueError(f"unknown mode {cfg.mode!r}")
    ctx = cfg.field()
    n = ideal.n
    if kind == "ms":
        lo, used = ms_lower_bound(ideal, cfg.alpha_hint)
        hi, up = ms_upper_bound(ideal)
    else:
        lo, used = cs_lower_bound(ideal, cfg.alpha_hint)
        hi, up = n, [{"name": "all variables", "value": n}]
    hi = max(hi, lo)
    used = used + up
    cert = Certification("randomized", ideal.p, cfg.trials, failure_bound(kind, ideal))
    if ideal.quotient_dim == 0:
        return InvariantReport(kind, n, 0, 0, [], cert, used)
    T = product_tensor(ideal)
    for r in range(lo, hi + 1):
        if r == n:
            # the variables themselves always witness both invariants
            w = np.eye(n, dtype=np.int64)
            return InvariantReport(kind, n, lo, r, w.tolist(), cert, used)
        hit = next(sample_level(kind, ideal, r, ctx, 0, cfg.trials, T, cfg.batch), None)
        if hit is not None:
            return InvariantReport(kind, n, lo, r, hit[1].tolist(), cert, used)
        cert.levels_excluded.append((r, cfg.trials))
    return InvariantReport(kind, n, lo, hi, None, cert, used)


def compute_ms(ideal: QuadIdeal, config: SearchConfig | None = None, **kw) -> InvariantReport:
    return compute("ms", ideal, _merge(ideal, config, kw))


def compute_cs(ideal: QuadIdeal, config: SearchConfig | None = None, **kw) -> InvariantReport:
    return compute("cs", ideal, _merge(ideal, config, kw))


def _merge(ideal, config, kw):
    if config is None:
        kw.setdefault("prime", ideal.p)
        return SearchConfig(**kw)
    if kw:
        raise TypeError("pass either a SearchConfig or keyword options, not both")
    return config


# -- exhaustive mode --------------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_bases(n: int, r: int, p: int):
    """Yield arrays (chunk, r, n) of RREF bases covering every r-dim subspace of GF(p)^n."""
    for piv in itertools.combinations(range(n), r):
        free = [(i, j) for i in range(r) for j in range(piv[i] + 1, n) if j not in piv]
        base = np.zeros((r, n), dtype=np.int64)
        base[np.arange(r), list(piv)] = 1
        vals = np.array(list(itertools.product(range(p), repeat=len(free))), dtype=np.int64)
        vals = vals.reshape(p ** len(free), len(free))
        out = np.repeat(base[None], len(vals), axis=0)
        for k, (i, j) in enumerate(free):
            out[:, i, j] = vals[:, k]
        yield out


def _compute_exhaustive(kind, ideal, cfg):
    n, p = ideal.n, ideal.p
    if n > EXHAUSTIVE_MAX_N:
        raise TooLarge(f"exhaustive mode needs n <= {EXHAUSTIVE_MAX_N}")
    total = sum(gaussian_binomial(n, r, p) for r in range(n + 1))
    if total > EXHAUSTIVE_MAX_SUBSPACES:
        raise TooLarge(f"{total} subspaces of GF({p})^{n} exceed the guard")
    ctx = FieldCtx(p, cfg.seed, allow_char_2=True)
    # only field-independent counting bounds are used here
    if kind == "ms":
        lo, used = ms_lower_bound(ideal, cfg.alpha_hint)
    else:
        lo, used = cs_lower_bound(ideal, cfg.alpha_hint, counting_only=True)
    cert = Certification("exact-exhaustive", p)
    if ideal.quotient_dim == 0:
        return InvariantReport(kind, n, 0, 0, [], cert, used)
    T = product_tensor(ideal)
    for r in range(max(lo, 1), n + 1):
        for chunk in subspace_bases(n, r, p):
            ok = _batch_check(kind, ideal, chunk, T, ctx)
            if ok.any():
                w = chunk[int(np.flatnonzero(ok)[0])]
                return InvariantReport(kind, n, r, r, w.tolist(), cert, used)
    raise AssertionError("the full variable set must witness")
