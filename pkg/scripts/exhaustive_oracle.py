#!/usr/bin/env python3
"""Compare enumerate_circuits against the brute-force oracle on every small ground set.

Covers all subsets of {0..hi}^n with at most ``max_size`` points.
"""
import argparse
import itertools
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from oracles import brute_force_circuits  # noqa: E402
from soncexpose.circuits import enumerate_circuits  # noqa: E402
from soncexpose.lattice import GroundSet  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--hi", type=int, default=4)
    ap.add_argument("--max-size", type=int, default=7)
    args = ap.parse_args()

    universe = list(itertools.product(range(args.hi + 1), repeat=args.n))
    t0 = time.perf_counter()
    checked = 0
    for k in range(1, args.max_size + 1):
        bad = 0
        for pts in itertools.combinations(universe, k):
            mine = [(c.S, c.beta, c.lam) for c in enumerate_circuits(GroundSet(args.n, pts))]
            if mine != brute_force_circuits(pts):
                bad += 1
                print("mismatch:", pts)
            checked += 1
        print(f"|A| = {k}: done, {bad} mismatches ({checked} sets so far, {time.perf_counter() - t0:.0f}s)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
