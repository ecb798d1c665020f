#!/usr/bin/env python3
"""Run the full atlas pipeline over the fuzz corpus and print a summary.

Usage: python3 scripts/fuzz_atlas.py [--count 200] [--probe] [--samples 16] [--out atlas.jsonl]
"""
import argparse
import json
import time
from collections import Counter

from soncexpose.cli import AtlasConfig, run_atlas
from soncexpose.corpus import fuzz_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--samples", type=int, default=16)
    ap.add_argument("--probe", action="store_true")
    ap.add_argument("--out", help="write one JSON report per line")
    args = ap.parse_args()

    cfg = AtlasConfig(samples=args.samples, probe=args.probe)
    stats = Counter()
    t0 = time.perf_counter()
    sink = open(args.out, "w") if args.out else None
    for A in fuzz_corpus(args.count, args.seed):
        report = run_atlas(A, cfg)
        stats["ground sets"] += 1
        stats["rays"] += len(report.rays)
        stats["circuits"] += len(report.circuits)
        stats["exposed"] += sum(d["exposed"] for d in report.decisions)
        stats["unexposed"] += sum(not d["exposed"] for d in report.decisions)
        stats["failures"] += len(report.failures)
        if sink:
            sink.write(json.dumps(report.payload()) + "\n")
    if sink:
        sink.close()
    for k, v in stats.items():
        print(f"{k:>12}: {v}")
    print(f"{'elapsed':>12}: {time.perf_counter() - t0:.1f}s")
    return 1 if stats["failures"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
