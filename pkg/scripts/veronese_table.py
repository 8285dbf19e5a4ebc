"""Table of doubling-set sizes: lower bound, exact minimum, construction, sqrt bound."""
from __future__ import annotations

import argparse

from msquared.veronese import veronese_cs_bounds


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=40)
    args = ap.parse_args()
    print(f"{'n':>3} {'lower':>5} {'exact':>5} {'snd':>4} {'sqrt':>4}  optimal set")
    for n in range(1, args.max + 1):
        b = veronese_cs_bounds(n)
        exact = "-" if b["exact"] is None else b["exact"]
        print(f"{n:>3} {b['lower']:>5} {exact:>5} {b['upper']:>4} {b['sqrt_upper']:>4}  {b['set'] or ''}")


if __name__ == "__main__":
    main()
