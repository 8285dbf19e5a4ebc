"""Disjoint unions: compare ms and cs of G + H with the sums over the parts.

Products of variables from different parts survive in the union's quotient,
so the union needs at least as many forms as the parts together.  Rows marked
with > are the small cases where it needs strictly more.
"""
from __future__ import annotations

import argparse
from itertools import combinations_with_replacement

from msquared import graphs as gr
from msquared.invariants import SearchConfig, compute


def small_graphs():
    return {
        "K1": gr.empty(1), "K2": gr.complete(2), "P3": gr.path(3), "K3": gr.complete(3),
        "C4": gr.cycle(4), "S4": gr.star(4), "C5": gr.cycle(5), "2K1": gr.empty(2),
    }


def value(kind, g, p, trials):
    cfg = SearchConfig(trials=trials, alpha_hint=gr.independence_number(g), prime=p)
    return compute(kind, gr.edge_ideal(g, p), cfg).sampled_value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--trials", type=int, default=100)
    args = ap.parse_args()
    gs = small_graphs()
    single = {(k, name): value(k, g, args.prime, args.trials) for name, g in gs.items() for k in ("ms", "cs")}
    print(f"{'G':>4} {'H':>4} {'ms':>3} {'sum':>4} {'cs':>3} {'sum':>4}")
    for a, b in combinations_with_replacement(sorted(gs), 2):
        u = gr.disjoint_union(gs[a], gs[b])
        row = [a, b]
        for k in ("ms", "cs"):
            row += [value(k, u, args.prime, args.trials), single[(k, a)] + single[(k, b)]]
        flag = "  >" if row[2] > row[3] or row[4] > row[5] else ""
        print(f"{row[0]:>4} {row[1]:>4} {row[2]:>3} {row[3]:>4} {row[4]:>3} {row[5]:>4}{flag}")


if __name__ == "__main__":
    main()
