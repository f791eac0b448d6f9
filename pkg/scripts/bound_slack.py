"""Slack of the global eigenvalue bounds on L_k across named families.

    python scripts/bound_slack.py --n 4..8 --k 1..3
    python scripts/bound_slack.py --csv slack.csv

A zero in either slack column means the bound is attained.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from tokenspectra.cli import parse_range
from tokenspectra.graphs import complete_multipartite, cycle, disjoint_cliques, path
from tokenspectra.verify import global_bounds


@dataclass(frozen=True)
class SlackConfig:
    n: tuple[int, ...] = (4, 5, 6, 7, 8)
    k: tuple[int, ...] = (1, 2, 3)


def family_grid(n: int):
    yield f"P_{n}", path(n)
    yield f"C_{n}", cycle(n)
    for s in range(2, n):
        if n % s == 0 and n // s >= 2:
            yield f"{n // s}K_{s}", disjoint_cliques(n // s, s)
            yield f"K_{{{n // s}x{s}}}", complete_multipartite(n // s, s)


def rows(cfg: SlackConfig):
    for n in cfg.n:
        for name, g in family_grid(n):
            for k in cfg.k:
                if k > n // 2:
                    continue
                w = global_bounds(g, k).witness
                yield {"graph": name, "n": n, "k": k,
                       "lower_slack": round(w["lower_slack"], 9) + 0.0,
                       "upper_slack": round(w["upper_slack"], 9) + 0.0}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="4..8")
    ap.add_argument("--k", default="1..3")
    ap.add_argument("--csv", help="write rows to this path instead of stdout")
    args = ap.parse_args(argv)
    cfg = SlackConfig(tuple(parse_range(args.n)), tuple(parse_range(args.k)))

    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=["graph", "n", "k", "lower_slack", "upper_slack"])
        writer.writeheader()
        writer.writerows(rows(cfg))
    finally:
        if args.csv:
            out.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
