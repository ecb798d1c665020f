#!/usr/bin/env python3
"""Print the unexposedness-probe margin curve eps*(t) for each unexposed monomial.

Example: python3 scripts/probe_curve.py '{"n": 1, "points": [0, 2, 4, 6]}' --kmax 20
"""
import argparse

from soncexpose.exposing import decide_exposed
from soncexpose.lattice import parse_ground_set
from soncexpose.rays import MonomialRay, SoncCone
from soncexpose.verify import default_t_grid, unexposedness_probe


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("ground_set", help="ground-set JSON document")
    ap.add_argument("--kmax", type=int, default=20)
    args = ap.parse_args()

    A = parse_ground_set(args.ground_set)
    cone = SoncCone.build(A)
    grid = default_t_grid(args.kmax)
    for r in cone.rays:
        if not isinstance(r, MonomialRay):
            continue
        d = decide_exposed(r, A, cone)
        if d.exposed:
            continue
        res = unexposedness_probe(r.point, d.witness, A, grid, cone)
        print(f"# {r.ident}  witness {d.witness}")
        print("k\tt\teps")
        for k, m in enumerate(res.margins):
            print(f"{k}\t2^-{k}\t{float(m):.6e}")
        print(f"# monotone: {res.monotone}\n")


if __name__ == "__main__":
    main()
