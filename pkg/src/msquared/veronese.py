"""Doubling sets: S within {0..n} whose sumset S + S is all of {0..2n}.

Their minimum size bounds cs of the n-th Veronese subring of k[x, y]; the
ring itself is never built.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import BadParams, TooLarge

MIN_SET_MAX_N = 40
VERONESE_MS = 2


@dataclass(frozen=True)
class DoublingSet:
    n: int
    members: tuple

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def complete(self) -> bool:
        return is_complete(self.members, self.n)


def sumset_mask(members) -> int:
    base = 0
    for a in members:
        base |= 1 << a
    mask = 0
    for a in members:
        mask |= base << a
    return mask


def is_complete(members, n: int) -> bool:
    if any(not 0 <= s <= n for s in members):
        return False
    return sumset_mask(members) == (1 << (2 * n + 1)) - 1


def snd_construction(n: int, d: int) -> DoublingSet:
    """{0..d} and {n-d..n} together with the multiples of d lying in [d, n-d]."""
    if not 1 <= d <= n:
        raise BadParams("need 1 <= d <= n")
    s = set(range(0, d + 1)) | set(range(n - d, n + 1))
    s |= {k * d for k in range(1, n // d + 1) if d <= k * d <= n - d}
    return DoublingSet(n, tuple(sorted(s)))


def best_snd(n: int) -> DoublingSet:
    return min((snd_construction(n, d) for d in range(1, n + 1)), key=lambda s: (s.size, s.members))


def lower_bound(n: int) -> int:
    """ceil(2 sqrt(n + 9/16) - 1/2), exactly: least k with (2k+1)^2 >= 16n + 9."""
    k = max(0, (isqrt(16 * n + 9) - 1) // 2)
    while (2 * k + 1) ** 2 < 16 * n + 9:
        k += 1
    return k


def sqrt_upper_bound(n: int) -> int:
    """ceil(2 sqrt(2n) + 1)."""
    # least k with (k-1)^2 >= 8n
    k = isqrt(8 * n) + 1
    if (k - 1) ** 2 < 8 * n:
        k += 1
    return k


def min_doubling_set(n: int) -> tuple:
    """Exact minimum size of a doubling set for n, with one optimal set."""
    if n < 1:
        raise BadParams("need n >= 1")
    if n > MIN_SET_MAX_N:
        raise TooLarge(f"doubling set search guard is n <= {MIN_SET_MAX_N}")
    incumbent = best_snd(n)
    if n == 1:
        return 2, DoublingSet(1, (0, 1))
    forced = sorted({0, 1, n - 1, n})
    full = (1 << (2 * n + 1)) - 1
    for size in range(max(lower_bound(n), len(forced)), incumbent.size):
        found = _search(n, forced, size, full)
        if found is not None:
            ds = DoublingSet(n, tuple(found))
            assert ds.complete
            return size, ds
    assert incumbent.complete
    return incumbent.size, incumbent


def _search(n, forced, size, full):
    # elements below n-1 are added in increasing order; the smallest uncovered
    # sum u forces the next element into (last, u]
    low = [x for x in forced if x < n - 1]
    members = sorted(set(forced))
    mask = sumset_mask(members)

    def rec(members, mask, last, left):
        if mask == full:
            return members
        if left == 0:
            return None
        missing = full & ~mask
        # k new elements add at most k*|S| + k(k+1)/2 new sums
        s = len(members)
        if bin(missing).count("1") > left * s + left * (left + 1) // 2:
            return None
        u = (missing & -missing).bit_length() - 1
        hi = min(u, n - 2)
        for x in range(hi, last, -1):
            add = 1 << (2 * x)
            for m in members:
                add |= 1 << (m + x)
            res = rec(members + [x], mask | add, x, left - 1)
            if res is not None:
                return res
        return None

    res = rec(members, mask, max(low) if low else -1, size - len(members))
    return None if res is None else sorted(res)


def veronese_cs_bounds(n: int) -> dict:
    if n < 1:
        raise BadParams("need n >= 1")
    best = best_snd(n)
    out = {
        "n": n,
        "lower": lower_bound(n),
        "upper": best.size,
        "upper_set": list(best.members),
        "sqrt_upper": sqrt_upper_bound(n),
        "ms": VERONESE_MS,
        "exact": None,
        "set": None,
    }
    if n <= MIN_SET_MAX_N:
        size, ds = min_doubling_set(n)
        out["exact"] = size
        out["set"] = list(ds.members)
    return out
