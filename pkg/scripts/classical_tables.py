#!/usr/bin/env python3
"""Print the normalized classical tables (spinors, forms, Weyl tensor, four dimensions, pf family)."""
import argparse
import sys

from weitzenboeck.cli import main as cli_main


def jobs(n_max: int):
    for n in range(3, n_max + 1, 2):
        yield ["classical", "spinor", "--n", str(n)]
    for n in range(4, n_max + 1):
        for p in range(1, n // 2):
            yield ["classical", "forms", "--n", str(n), "--p", str(p)]
    for n in range(5, n_max + 1):
        yield ["classical", "weyl", "--n", str(n)]
    for m in (2, 3):
        for p in ("1", "3/2", "2"):
            yield ["classical", "pf-family", "--n", str(2 * m), "--p", p]
    for k in range(1, 4):
        for l in range(1, 4):
            yield ["classical", "fourdim", "--k", str(k), "--l", str(l)]
    yield ["classical", "exceptional", "--n", "6", "--weight", "1,1"]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    args = ap.parse_args(argv)
    worst = 0
    for job in jobs(args.n_max):
        print(f"<!-- {' '.join(job)} -->")
        worst = max(worst, cli_main(job + ["--format", args.format]))
        print()
    return worst


if __name__ == "__main__":
    sys.exit(main())
