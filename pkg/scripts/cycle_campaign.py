"""Random-witness campaign on cycles at one level below the known upper bound.

    python3 scripts/cycle_campaign.py --n 8 --budget 100000 --workers 1

Writes hits (if any) as JSON lines and prints the summary record.
"""
from __future__ import annotations

import argparse
import json
import sys

from msquared.cli import parse_target, run_campaign


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--budget", type=int, default=100_000)
    ap.add_argument("--ms-level", type=int, default=None, help="default n - 4")
    ap.add_argument("--cs-level", type=int, default=None, help="default n - 1")
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--hits", default=None, help="JSONL file for hits")
    args = ap.parse_args(argv)

    target = parse_target(f"cycle:{args.n}", args.prime)
    out = open(args.hits, "a") if args.hits else None

    def sink(rec):
        if out:
            out.write(json.dumps(rec) + "\n")

    levels = {"ms": args.ms_level or args.n - 4, "cs": args.cs_level or args.n - 1}
    for kind, level in levels.items():
        summary = run_campaign(kind, target, level, args.budget, args.prime, args.seed,
                               workers=args.workers, sink=sink)
        print(json.dumps(summary))
    if out:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
