"""The acceptance table: each row is a function returning a RowResult.

Statuses: PASS, FAIL, OBSERVATION (a conditional claim that did not hold,
recorded rather than asserted), FINDING (a campaign produced a hit) and
SKIPPED (field too small for randomized certification).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

import numpy as np

from . import graphs as gr
from .constructions import (
    cycle_structured_witness,
    edge_cover_witness,
    join_witness,
    odd_cycle_cs_witness,
    squares_chain_witness,
    triangular_complete_witness,
)
from .exactfield import DEFAULT_PRIME, make_field
from .invariants import (
    SearchConfig,
    compute,
    cs_check,
    cs_lower_bound,
    ms_check,
)
from .quadspace import monomial_ideal, pair_list, span_quad, squares_ideal
from .veronese import is_complete, lower_bound, min_doubling_set, snd_construction, sqrt_upper_bound
from .wlp import has_wlp, ms_via_wlp_chain, squares_ms_formula

SMALL_PRIME = 1000


@dataclass
class RowResult:
    row: int
    title: str
    status: str = "PASS"
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg):
        self.status = "FAIL"
        self.notes.append(msg)

    def expect(self, cond, msg):
        if not cond:
            self.fail(msg)
        return cond

    def line(self) -> str:
        tail = f" | {'; '.join(self.notes[:6])}" if self.notes else ""
        return f"[{self.status}] row {self.row:2d}: {self.title} ({self.seconds:.1f}s){tail}"

    def to_json(self) -> dict:
        return {"row": self.row, "title": self.title, "status": self.status,
                "notes": self.notes, "seconds": round(self.seconds, 2)}


@dataclass
class Env:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 50
    quick: bool = False
    _cache: dict = field(default_factory=dict)

    def cfg(self, alpha=None, trials=None) -> SearchConfig:
        return SearchConfig(trials=trials or self.trials, alpha_hint=alpha, prime=self.prime, seed=self.seed)

    def report(self, kind, g: gr.Graph):
        key = (kind, g.key())
        if key not in self._cache:
            ideal = gr.edge_ideal(g, self.prime)
            self._cache[key] = compute(kind, ideal, self.cfg(gr.independence_number(g)))
        return self._cache[key]

    def ms(self, g):
        return self.report("ms", g).sampled_value

    def cs(self, g):
        return self.report("cs", g).sampled_value

    def ideal_value(self, kind, ideal):
        return compute(kind, ideal, self.cfg()).sampled_value


def _tri_index(n):
    r = 1
    while r * (r + 1) // 2 < n:
        r += 1
    return r


def row1(env, res):
    for n in range(2, 13):
        v = env.ms(gr.complete(n))
        res.expect(v == 1, f"ms(K{n}) = {v}")
    for n in range(2, 22):
        v = env.cs(gr.complete(n))
        res.expect(v == _tri_index(n), f"cs(K{n}) = {v}, expected {_tri_index(n)}")


EXAMPLE_R4 = [[1, 2, 3, 7], [1, 4, 5, 8], [2, 4, 6, 9], [3, 5, 6, 10]]


def row2(env, res):
    for r in range(1, 7):
        t, forms = triangular_complete_witness(r)
        res.expect(cs_check(gr.edge_ideal(gr.complete(t), env.prime), forms), f"r = {r} fails")
    _, forms = triangular_complete_witness(4)
    got = [sorted(int(j) + 1 for j in np.flatnonzero(f)) for f in forms]
    res.expect(got == EXAMPLE_R4, f"r = 4 forms {got}")


def row3(env, res):
    for n in range(2, 9):
        I = squares_ideal(n, env.prime)
        v = env.ideal_value("cs", I)
        res.expect(v == n - 1, f"cs(squares {n}) = {v}")
        res.expect(cs_check(I, squares_chain_witness(n)), f"chain witness fails at n = {n}")


def row4(env, res):
    mons = pair_list(3)
    for gens in combinations(mons, 3):
        v = env.ideal_value("cs", monomial_ideal(3, gens, env.prime))
        squares = [m for m in gens if m[0] == m[1]]
        special = len(squares) == 2 and (squares[0][0], squares[1][0]) in gens
        want = 3 if special else 2
        res.expect(v == want, f"t=3 {gens}: cs = {v}, expected {want}")
    for gens in combinations(mons, 4):
        v = env.ideal_value("cs", monomial_ideal(3, gens, env.prime))
        res.expect(v == 2, f"t=4 {gens}: cs = {v}")


def row5(env, res):
    for n in (2, 3):
        mons = pair_list(n)
        for gens in combinations(mons, len(mons) - 1):
            v = env.ideal_value("cs", monomial_ideal(n, gens, env.prime))
            res.expect(v == 1, f"n={n} {gens}: cs = {v}")


def row6(env, res):
    for n in range(3, 9):
        g = gr.star(n)
        res.expect(env.cs(g) == n, f"cs(S{n}) = {env.cs(g)}")
        res.expect(env.ms(g) == n - 1, f"ms(S{n}) = {env.ms(g)}")


def row7(env, res):
    for n in range(4, 9):
        res.expect(env.cs(gr.path(n)) == n, f"cs(P{n}) = {env.cs(gr.path(n))}")
    res.expect(env.ms(gr.path(4)) == 2, f"ms(P4) = {env.ms(gr.path(4))}")
    res.expect(env.ms(gr.path(5)) == 3, f"ms(P5) = {env.ms(gr.path(5))}")
    rep = env.report("ms", gr.path(6))
    res.expect(3 <= rep.lo and rep.hi <= 4, f"ms(P6) interval [{rep.lo}, {rep.hi}]")
    res.notes.append(f"ms(P6) search: [{rep.lo}, {rep.hi}]")


def row8(env, res):
    for n in (3, 5, 7, 9):
        res.expect(env.cs(gr.cycle(n)) == n - 1, f"cs(C{n}) = {env.cs(gr.cycle(n))}")
    for n, want in ((3, 1), (4, 2), (6, 3)):
        res.expect(env.ms(gr.cycle(n)) == want, f"ms(C{n}) = {env.ms(gr.cycle(n))}")
    for n, lo, hi in ((5, 2, 3), (7, 3, 4)):
        rep = env.report("ms", gr.cycle(n))
        res.expect(lo <= rep.lo and rep.hi <= hi, f"ms(C{n}) interval [{rep.lo}, {rep.hi}]")
        res.notes.append(f"ms(C{n}) in [{rep.lo}, {rep.hi}]")
    for m in range(1, 5):
        res.expect(cs_check(gr.edge_ideal(gr.cycle(2 * m + 1), env.prime), odd_cycle_cs_witness(m)),
                   f"odd-cycle witness m = {m}")
    t0 = time.time()
    for n in range(8, 41):
        ok = ms_check(gr.edge_ideal(gr.cycle(n), env.prime), cycle_structured_witness(n, env.prime))
        res.expect(ok, f"structured witness fails at n = {n}")
    res.notes.append(f"structured sweep 8..40 in {time.time() - t0:.1f}s")


def row9(env, res):
    from .cli import Target, run_campaign

    budget = 10_000 if env.quick else 100_000
    g = gr.cycle(8)
    target = Target("cycle:8", gr.edge_ideal(g, env.prime), g)
    for kind, level in (("ms", 4), ("cs", 7)):
        hits = []
        summary = run_campaign(kind, target, level, budget, env.prime, env.seed, sink=hits.append)
        res.notes.append(f"{kind} level {level}: {summary['hits']} hits in {budget} trials")
        if summary["hits"]:
            res.status = "FINDING"
            res.notes.append(f"witness found: {hits[0]['witness']}")


def row10(env, res):
    P = gr.petersen()
    ideal = gr.edge_ideal(P, env.prime)
    a = gr.independence_number(P)
    res.expect(a == 4, f"alpha = {a}")
    ms = env.report("ms", P)
    res.expect(ms.lo == 4 and ms.hi <= 5, f"ms interval [{ms.lo}, {ms.hi}]")
    res.notes.append(f"ms in [{ms.lo}, {ms.hi}]")
    lb, _ = cs_lower_bound(ideal, a)
    res.expect(lb == 9, f"cs lower bound {lb}")
    cs = env.report("cs", P)
    res.expect(8 <= cs.lo and cs.lo >= 9 and cs.hi <= 10, f"cs interval [{cs.lo}, {cs.hi}]")
    res.notes.append(f"cs in [{cs.lo}, {cs.hi}]")
    spokes = sorted(gr.petersen_spokes())
    covers = {tuple(c) for c in gr.iter_k_connected_edge_covers(P, 5)}
    res.expect(tuple(spokes) in covers, "spoke cover not among size-5 covers")
    res.expect(ms_check(ideal, edge_cover_witness(P, spokes)), "spoke witness fails")


def row11(env, res):
    base = {"P3": gr.path(3), "C4": gr.cycle(4), "K3": gr.complete(3), "S4": gr.star(4),
            "empty2": gr.empty(2), "empty3": gr.empty(3)}
    for (a, g), (b, h) in combinations_with_replacement(base.items(), 2):
        j = gr.join(g, h)
        want = max(env.ms(g), env.ms(h))
        res.expect(env.ms(j) == want, f"ms({a}*{b}) = {env.ms(j)}, expected {want}")
        w = join_witness(env.report("ms", g).witness, g.n, env.report("ms", h).witness, h.n, g, h, env.prime)
        res.expect(ms_check(gr.edge_ideal(j, env.prime), w), f"join witness {a}*{b}")
    for total in range(1, 8):
        for parts in _partitions(total):
            g = gr.complete_multipartite(parts)
            res.expect(env.ms(g) == max(parts), f"ms(K{parts}) = {env.ms(g)}")


def _partitions(n, most=None):
    most = n if most is None else most
    if n == 0:
        yield []
        return
    for k in range(min(n, most), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def row12(env, res):
    for n in range(5, 9):
        res.expect(env.ms(gr.kite(n)) == 2, f"ms(T{n}) = {env.ms(gr.kite(n))}")
    for m in range(2, 6):
        for k in range(1, 5):
            v = env.ms(gr.jellyfish(m, k))
            res.expect(v == k + 1, f"ms(J{m},{k}) = {v}")
    # with m = 1 the body is a single vertex and the graph is a star on k+1 vertices
    for k in range(1, 5):
        v = env.ms(gr.jellyfish(1, k))
        res.expect(v == k, f"ms(J1,{k}) = {v}")
    res.notes.append("m = 1 degenerates to a star: ms(J1,k) = k, checked separately")
    for n in range(3, 8):
        s = env.ms(gr.star(n)) + env.ms(gr.complement(gr.star(n)))
        res.expect(s == n + 1, f"star sum at n = {n}: {s}")


def row13(env, res):
    rng = np.random.default_rng(env.seed)
    chordal_seen = other_seen = 0
    while chordal_seen < 200:
        n = int(rng.integers(2, 9))
        dens = rng.uniform(0.2, 0.9)
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < dens]
        g = gr.from_edges(n, edges)
        if gr.is_chordal(gr.complement(g)):
            chordal_seen += 1
            a = gr.independence_number(g)
            res.expect(env.ms(g) == a, f"chordal complement {edges}: ms {env.ms(g)} vs alpha {a}")
        elif other_seen < 200:
            other_seen += 1
            bound = n - gr.mcn(g) + 3
            hi = env.report("ms", g).hi
            res.expect(hi <= bound, f"{edges}: ms <= {hi} exceeds {bound}")
    res.notes.append(f"{chordal_seen} chordal-complement and {other_seen} other graphs")


def row14(env, res):
    for n in range(1, 21):
        size, ds = min_doubling_set(n)
        res.expect(is_complete(ds.members, n), f"n = {n} set incomplete")
        res.expect(not _smaller_exists(n, size), f"n = {n}: smaller set exists")
        up = min(snd_construction(n, d).size for d in range(1, n + 1))
        res.expect(lower_bound(n) <= size <= up <= sqrt_upper_bound(n), f"sandwich fails at n = {n}")
    for n in range(1, 201):
        for d in range(1, n + 1):
            s = snd_construction(n, d)
            if not s.complete or s.size > 2 * d + n // d + 1:
                res.fail(f"S({n},{d}) bad")


def _smaller_exists(n, size):
    # brute force over sets holding the forced members
    if n == 1:
        return False
    forced = sorted({0, 1, n - 1, n})
    rest = [x for x in range(n + 1) if x not in forced]
    for k in range(len(forced), size):
        for extra in combinations(rest, k - len(forced)):
            if is_complete(forced + list(extra), n):
                return True
    return False


def row15(env, res):
    for n in range(1, 7):
        res.expect(has_wlp(squares_ideal(n, env.prime)), f"no WLP seen for squares n = {n}")
    flags_ok = True
    for n in range(2, 8):
        I = squares_ideal(n, env.prime)
        chain_v, chain = ms_via_wlp_chain(I, ctx=make_field(env.prime, env.seed))
        direct = env.ideal_value("ms", I)
        formula = squares_ms_formula(n)
        res.expect(chain_v == direct == formula, f"n = {n}: chain {chain_v}, search {direct}, formula {formula}")
        if not chain.all_verified:
            flags_ok = False
            bad = [s.i for s in chain.steps if not s.wlp]
            res.notes.append(f"n = {n}: WLP not observed at chain steps {bad}, h2 = {chain.h2}")
    if res.status == "PASS" and not flags_ok:
        res.status = "OBSERVATION"


def row16(env, res):
    rng = np.random.default_rng(env.seed + 1)
    p = env.prime
    hits = 0
    for _ in range(1000):
        n = int(rng.integers(1, 6))
        N = n * (n + 1) // 2
        t = int(rng.integers(0, N + 1))
        gens = rng.integers(0, p, size=(t, N)) * (rng.random((t, N)) < 0.4)
        I = span_quad(list(gens), n, p)
        r = int(rng.integers(0, n + 1))
        L = rng.integers(0, p, size=(r, n)) * (rng.random((r, n)) < 0.6)
        c, m = cs_check(I, L), ms_check(I, L)
        hits += c
        res.expect(m or not c, f"dominance fails for n={n}, t={I.rank}")
    res.notes.append(f"dominance: {hits} of 1000 instances pass cs")

    mismatches = 0
    for n in range(1, 5):
        for g in _all_graphs(n):
            I = gr.edge_ideal(g, 3)
            a = gr.independence_number(g)
            rnd = compute("ms", I, SearchConfig(trials=200, alpha_hint=a, prime=3, seed=env.seed))
            exh = compute("ms", I, SearchConfig(mode="exhaustive", alpha_hint=a, prime=3))
            if rnd.sampled_value != exh.value:
                mismatches += 1
                res.fail(f"GF(3) oracle mismatch on {g.edges()}")
    res.notes.append(f"GF(3) oracle mismatches: {mismatches}")

    for n in range(1, 6):
        for g in _all_graphs(n):
            v = env.ms(g)
            for i, j in combinations(range(1, n + 1), 2):
                if not g.has_edge(i, j):
                    w = env.ms(gr.add_edge(g, i, j))
                    res.expect(v - 1 <= w <= v, f"edge addition {g.edges()} + {(i, j)}: {v} -> {w}")
            for k in range(1, n):
                for verts in combinations(range(1, n + 1), k):
                    h = gr.induced_subgraph(g, verts)
                    res.expect(env.ms(h) <= v, f"induced {verts} of {g.edges()}")
            for d in (1, 2):
                res.expect(env.ms(gr.add_isolated(g, d)) == v + d, f"isolated +{d} on {g.edges()}")

    for _ in range(40):
        n = int(rng.integers(2, 8))
        g = gr.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5])
        perm = [int(x) + 1 for x in rng.permutation(n)]
        h = gr.relabel(g, perm)
        same = (gr.independence_number(g) == gr.independence_number(h)
                and gr.clique_cover_number(g) == gr.clique_cover_number(h)
                and gr.is_chordal(g) == gr.is_chordal(h)
                and gr.mcn(g) == gr.mcn(h)
                and _diam(g) == _diam(h)
                and env.ms(g) == env.ms(h) and env.cs(g) == env.cs(h))
        res.expect(same, f"relabeling changes invariants of {g.edges()} under {perm}")


def _diam(g):
    try:
        return gr.diameter(g)
    except gr.Disconnected:
        return None


def _all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield gr.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


ROWS = {
    1: ("complete graphs: ms = 1, cs = triangular index", row1, True),
    2: ("triangular construction passes cs check", row2, False),
    3: ("squares ideals: cs = n - 1", row3, True),
    4: ("n = 3 monomial ideals with t = 3, 4", row4, True),
    5: ("cs = 1 when one monomial is missing", row5, True),
    6: ("stars: cs = n, ms = n - 1", row6, True),
    7: ("paths: cs = n, small ms values", row7, True),
    8: ("cycles: cs, ms values and structured witnesses", row8, True),
    9: ("campaign nulls on C8", row9, True),
    10: ("Petersen graph bounds and spoke cover", row10, True),
    11: ("join law and complete multipartite graphs", row11, True),
    12: ("kites, jellyfish, star plus complement", row12, True),
    13: ("chordal complement: ms = alpha; else mcn bound", row13, True),
    14: ("doubling sets: exact minima and constructions", row14, False),
    15: ("WLP chain vs search vs closed formula on squares", row15, True),
    16: ("property suites: dominance, GF(3) oracle, monotonicity, relabeling", row16, True),
}


def run_row(k: int, env: Env) -> RowResult:
    title, fn, field_sensitive = ROWS[k]
    res = RowResult(k, title)
    t0 = time.time()
    if field_sensitive and env.prime < SMALL_PRIME:
        res.status = "SKIPPED"
        res.notes.append(f"p = {env.prime} is too small for randomized certification")
    else:
        try:
            fn(env, res)
        except Exception as e:  # a crash is a failed row, reported with the rest
            res.fail(f"{type(e).__name__}: {e}")
    res.seconds = time.time() - t0
    return res


def run_all(prime=DEFAULT_PRIME, seed=0, quick=False, only=None, echo=print) -> list:
    env = Env(prime=prime, seed=seed, quick=quick)
    out = []
    for k in sorted(ROWS):
        if only and k not in only:
            continue
        res = run_row(k, env)
        if echo:
            echo(res.line())
        out.append(res)
    return out
