#!/usr/bin/env python3
"""Run every verification suite and print a one-line summary per cell."""
import argparse
import sys
import time

from weitzenboeck import suites


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--weight-budget", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    chosen = list(suites.SUITES) if args.suite == "all" else [args.suite]
    t0 = time.perf_counter()
    tasks = suites.plan(chosen, budget=args.weight_budget, seed=args.seed, samples=args.samples)
    report = suites.run(tasks, args.jobs)
    for cell in report["cells"]:
        bad = [c["name"] for c in cell["checks"] if not c["passed"]]
        status = "skip" if cell["skipped"] else ("FAIL " + ",".join(bad) if bad else "ok")
        print(f"{cell['suite']:<10} n={cell['n']:<2} {cell['item']:<40} {len(cell['checks']):>3} checks  "
              f"{cell['seconds']:>7.2f}s  {status}")
    print(f"{report['checks']} checks, {report['failures']} failing cells, {report['skipped']} skipped, "
          f"{time.perf_counter() - t0:.1f}s")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
