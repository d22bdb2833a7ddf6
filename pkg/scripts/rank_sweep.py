#!/usr/bin/env python3
"""Rank of the independent formula family over a grid of dominant weights."""
import argparse
import sys
import time
from collections import Counter

from weitzenboeck.bochner import RankDeficit, independent_family
from weitzenboeck.branching import decompose
from weitzenboeck.weights import dominant_weights


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--max-entry", default="3")
    args = ap.parse_args(argv)

    failures = 0
    print("n | weights | exceptional | rank histogram (N -> rank) | seconds")
    for n in range(args.n_min, args.n_max + 1):
        t0 = time.perf_counter()
        hist, exc = Counter(), 0
        count = 0
        for rho in dominant_weights(n, args.max_entry):
            count += 1
            N = len(decompose(rho).summands)
            try:
                cert = independent_family(rho)
            except RankDeficit as err:
                failures += 1
                print(f"  deficit: {err}", file=sys.stderr)
                continue
            hist[(N, cert.rank)] += 1
            exc += decompose(rho).exceptional
        shown = ", ".join(f"{N}->{r}: {c}" for (N, r), c in sorted(hist.items()))
        print(f"{n} | {count} | {exc} | {shown} | {time.perf_counter() - t0:.2f}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
