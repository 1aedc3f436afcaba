"""Run every randomized invariance property with timings.

    python3 scripts/run_suites.py --seed 0 --count 200 [--template corrupt]
"""
from __future__ import annotations

import argparse
import time

from clasperkit.suites import PROPERTIES, run_property


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--template", choices=("standard", "corrupt"), default="standard")
    ap.add_argument("--only", nargs="*", choices=sorted(PROPERTIES))
    args = ap.parse_args()
    failed = 0
    for name in args.only or PROPERTIES:
        t = time.perf_counter()
        r = run_property(name, args.seed, args.count, args.template)
        print(f"{name:26s} {r.passed:5d}/{r.total:<5d} {time.perf_counter() - t:7.2f}s  {r.first_failure or ''}")
        failed += not r.ok
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
