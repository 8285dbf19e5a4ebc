"""Command line entry point.

    msquared ms cycle:8
    msquared cs file:ideal.json --json
    msquared search ms cycle:8 --level 4 --budget 100000 --out hits.jsonl
    msquared verify
    msquared construct triangular 4
    msquared veronese 12
    msquared wlp squares:6

Exit codes: 0 when the bounds closed, 2 when only an interval is known, 1 on error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from . import graphs as gr
from .constructions import CONSTRUCTIONS
from .errors import BadParams, MsquaredError
from .exactfield import DEFAULT_PRIME, make_field
from .invariants import SearchConfig, compute, failure_bound, sample_level
from .quadspace import QuadIdeal, ideal_from_json, squares_ideal
from .veronese import veronese_cs_bounds
from .wlp import ms_via_wlp_chain

EXIT_EXACT, EXIT_ERROR, EXIT_INTERVAL = 0, 1, 2


# -- targets ---------------------------------------------------------------------


@dataclass
class Target:
    descriptor: str
    ideal: QuadIdeal
    graph: gr.Graph | None = None

    @property
    def alpha(self) -> int | None:
        if self.graph is None or self.graph.n > gr.ALPHA_MAX_N:
            return None
        return gr.independence_number(self.graph)


_GRAPH_OPS = {"union": gr.disjoint_union, "join": gr.join}


def _split_args(s: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def parse_graph(spec: str) -> gr.Graph:
    """Grammar: family[:a,b,...] | union(G,H) | join(G,H) | complement(G) | file:path."""
    spec = spec.strip()
    if spec.startswith("file:"):
        return gr.graph_from_json(Path(spec[5:]).read_text())
    if spec.endswith(")") and "(" in spec:
        op, inner = spec[:-1].split("(", 1)
        args = _split_args(inner)
        if op == "complement" and len(args) == 1:
            return gr.complement(parse_graph(args[0]))
        if op in _GRAPH_OPS and len(args) >= 2:
            g = parse_graph(args[0])
            for a in args[1:]:
                g = _GRAPH_OPS[op](g, parse_graph(a))
            return g
        raise BadParams(f"cannot parse graph expression {spec!r}")
    fam, _, params = spec.partition(":")
    args = [x for x in params.split(",") if x.strip()]
    return gr.build_family(fam, *args)


def parse_target(spec: str, p: int = DEFAULT_PRIME) -> Target:
    spec = spec.strip()
    if spec.startswith("squares:"):
        n = int(spec.split(":", 1)[1])
        return Target(spec, squares_ideal(n, p))
    if spec.startswith("file:"):
        text = Path(spec[5:]).read_text()
        data = json.loads(text)
        digest = hashlib.sha256(text.encode()).hexdigest()[:16]
        desc = f"file:{Path(spec[5:]).name}#{digest}"
        if "quadrics" in data:
            return Target(desc, ideal_from_json(data, p))
        g = gr.graph_from_json(data)
        return Target(desc, gr.edge_ideal(g, p), g)
    g = parse_graph(spec)
    return Target(spec, gr.edge_ideal(g, p), g)


# -- records -----------------------------------------------------------------------


def result_record(target: Target, kind: str, report, cfg: SearchConfig) -> dict:
    return {
        "input": target.descriptor,
        "ideal_sha256": hashlib.sha256(
            json.dumps(target.ideal.to_json(), sort_keys=True).encode()).hexdigest()[:16],
        "kind": kind,
        "report": report.to_json(),
        "seed": cfg.seed,
        "prime": cfg.prime,
        "trials": cfg.trials,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "version": __version__,
    }


def _render(record: dict) -> str:
    rep = record["report"]
    cert = rep["certification"]
    lines = [
        f"input      {record['input']}",
        f"invariant  {rep['kind']}",
        f"value      {rep['value'] if rep['value'] is not None else '-'}",
        f"interval   [{rep['lo']}, {rep['hi']}]",
        f"mode       {cert['mode']}  p={cert['p']}  T={cert['T']}  bound={cert['bound']}",
    ]
    if cert["levels_excluded"]:
        lines.append("sampled    " + ", ".join(f"r={r} ({t} trials)" for r, t in cert["levels_excluded"]))
    for b in rep["bounds_used"]:
        lines.append(f"bound      {b['name']}: {b['value']}")
    if rep["witness"] is not None:
        lines.append(f"witness    {len(rep['witness'])} forms")
        for w in rep["witness"]:
            lines.append("           " + " ".join(str(c) for c in w))
    return "\n".join(lines)


def _emit(obj, args, text: str | None = None):
    if args.out:
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(obj) + "\n")
    if args.json or text is None:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _config(args, alpha=None) -> SearchConfig:
    make_field(args.prime, args.seed, allow_char_2=args.allow_char_2)
    return SearchConfig(trials=args.trials, alpha_hint=alpha, mode=args.mode,
                        prime=args.prime, seed=args.seed)


# -- commands ------------------------------------------------------------------------


def cmd_invariant(args) -> int:
    target = parse_target(args.target, args.prime)
    cfg = _config(args, target.alpha)
    report = compute(args.kind, target.ideal, cfg)
    record = result_record(target, args.kind, report, cfg)
    _emit(record, args, _render(record))
    return EXIT_EXACT if report.exact else EXIT_INTERVAL


def _levels(spec: str) -> list:
    if "-" in spec:
        a, b = spec.split("-", 1)
        return list(range(int(a), int(b) + 1))
    if ".." in spec:
        a, b = spec.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(spec)]


def _search_chunk(job):
    kind, ideal_json, p, seed, r, start, count = job
    ideal = ideal_from_json(ideal_json, p)
    ctx = make_field(p, seed, allow_char_2=p == 2)
    return [(t, w.tolist()) for t, w in sample_level(kind, ideal, r, ctx, start, count)]


def run_campaign(kind, target: Target, level: int, budget: int, p=DEFAULT_PRIME, seed=0,
                 offset=0, workers=1, chunk=20000, sink=None) -> dict:
    """Sample ``budget`` random r-tuples at one level; every hit is passed to sink.

    Trial ids run from ``offset``, so a campaign can be resumed or split.
    """
    ideal = target.ideal
    jobs = [(kind, ideal.to_json(), p, seed, level, s, min(chunk, offset + budget - s))
            for s in range(offset, offset + budget, chunk)]
    t0 = time.time()
    hits = 0
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = ex.map(_search_chunk, jobs)
            for res in results:
                hits += _sink_hits(res, kind, target, level, p, seed, sink)
    else:
        ctx = make_field(p, seed, allow_char_2=p == 2)
        for job in jobs:
            res = [(t, w.tolist()) for t, w in sample_level(kind, ideal, level, ctx, job[5], job[6])]
            hits += _sink_hits(res, kind, target, level, p, seed, sink)
    bound = failure_bound(kind, ideal)
    return {
        "type": "summary",
        "input": target.descriptor,
        "kind": kind,
        "level": level,
        "offset": offset,
        "trials": budget,
        "hits": hits,
        "per_trial_failure_bound": None if bound is None else f"{bound.numerator}/{bound.denominator}",
        "seed": seed,
        "prime": p,
        "seconds": round(time.time() - t0, 3),
        "version": __version__,
    }


def _sink_hits(res, kind, target, level, p, seed, sink):
    for trial, w in res:
        if sink is not None:
            sink({"type": "hit", "input": target.descriptor, "kind": kind, "level": level,
                  "trial": trial, "witness": w, "seed": seed, "prime": p})
    return len(res)


def cmd_search(args) -> int:
    target = parse_target(args.target, args.prime)
    make_field(args.prime, args.seed, allow_char_2=args.allow_char_2)
    out = open(args.out, "a", encoding="utf-8") if args.out else None

    def write(obj):
        line = json.dumps(obj)
        if out:
            out.write(line + "\n")
            out.flush()
        print(line)

    try:
        for level in _levels(args.level):
            summary = run_campaign(args.kind, target, level, args.budget, args.prime, args.seed,
                                   args.offset, args.workers, sink=write)
            write(summary)
            if summary["hits"] and args.stop_at_hit:
                break
    finally:
        if out:
            out.close()
    return EXIT_EXACT


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all(prime=args.prime, seed=args.seed, quick=args.quick, only=args.rows)
    failed = [r for r in results if r.status == "FAIL"]
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    return EXIT_ERROR if failed else EXIT_EXACT


def cmd_construct(args) -> int:
    f = CONSTRUCTIONS.get(args.name)
    if f is None:
        raise BadParams(f"unknown construction {args.name!r}; choose from {sorted(CONSTRUCTIONS)}")
    forms = np.asarray(f(*[int(x) for x in args.params]))
    obj = {"construction": args.name, "params": [int(x) for x in args.params],
           "n": int(forms.shape[1]), "forms": (forms % args.prime).tolist()}
    _emit(obj, args, None)
    return EXIT_EXACT


def cmd_veronese(args) -> int:
    obj = veronese_cs_bounds(args.n)
    _emit(obj, args, None)
    return EXIT_EXACT if obj["exact"] is not None else EXIT_INTERVAL


def cmd_wlp(args) -> int:
    target = parse_target(args.target, args.prime)
    ctx = make_field(args.prime, args.seed, allow_char_2=args.allow_char_2)
    value, chain = ms_via_wlp_chain(target.ideal, trials=args.wlp_trials, ctx=ctx)
    obj = {"input": target.descriptor, "value": value, "all_wlp": chain.all_verified,
           "chain": chain.to_json(), "prime": args.prime, "seed": args.seed}
    text = "\n".join([f"input   {target.descriptor}", f"steps   {value}",
                      f"all WLP {chain.all_verified}"]
                     + [f"i={s.i}  h={s.hilbert}  wlp={s.wlp}" for s in chain.steps])
    _emit(obj, args, text)
    return EXIT_EXACT if chain.all_verified else EXIT_INTERVAL


def cmd_graph(args) -> int:
    g = parse_graph(args.target)
    obj = {"input": args.target, **g.to_json(),
           "alpha": gr.independence_number(g),
           "chordal": gr.is_chordal(g),
           "complement_chordal": gr.is_chordal(gr.complement(g))}
    if g.n <= gr.MCN_MAX_N:
        obj["mcn"] = gr.mcn(g)
        obj["clique_cover"] = gr.clique_cover_number(g)
    try:
        obj["diameter"] = gr.diameter(g)
    except MsquaredError:
        obj["diameter"] = None
    if g.n <= gr.COVER_MAX_N:
        res = gr.min_k_connected_edge_cover(g)
        obj["k_connected_cover"] = None if res is None else {"size": res[0], "edges": res[1]}
    _emit(obj, args, None)
    return EXIT_EXACT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=50)
    common.add_argument("--mode", choices=["randomized", "exhaustive"], default="randomized")
    common.add_argument("--allow-char-2", action="store_true")
    common.add_argument("--json", action="store_true", help="print JSON instead of a table")
    common.add_argument("--out", help="append JSON lines to this file")

    ap = argparse.ArgumentParser(prog="msquared", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    for kind in ("ms", "cs"):
        s = sub.add_parser(kind, parents=[common], help=f"compute {kind} of a graph or ideal")
        s.add_argument("target")
        s.set_defaults(func=cmd_invariant, kind=kind)

    s = sub.add_parser("search", parents=[common], help="random witness campaign at fixed levels")
    s.add_argument("kind", choices=["ms", "cs"])
    s.add_argument("target")
    s.add_argument("--level", required=True, help="r, or a range a-b")
    s.add_argument("--budget", type=int, default=10000)
    s.add_argument("--offset", type=int, default=0, help="first trial id (resume point)")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--stop-at-hit", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="run the acceptance table")
    s.add_argument("--quick", action="store_true", help="smaller campaigns")
    s.add_argument("--rows", type=int, nargs="*")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", parents=[common], help="print a named witness construction")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("veronese", parents=[common], help="doubling-set bounds")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_veronese)

    s = sub.add_parser("wlp", parents=[common], help="Hilbert chain under general cuts")
    s.add_argument("target")
    s.add_argument("--wlp-trials", type=int, default=5)
    s.set_defaults(func=cmd_wlp)

    s = sub.add_parser("graph", parents=[common], help="combinatorial invariants of a graph")
    s.add_argument("target")
    s.set_defaults(func=cmd_graph)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MsquaredError, OSError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
