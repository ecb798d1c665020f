"""Deterministic fuzz corpus of small ground sets."""
from __future__ import annotations

import random

from .lattice import GroundSet

MOTZKIN = GroundSet.of([(0, 0), (4, 2), (2, 4), (2, 2)])
UNIVARIATE_EVEN = GroundSet.of([0, 2, 4, 6])
UNIVARIATE_ODD = GroundSet.of([0, 1, 2])


def random_ground_set(rng: random.Random, n: int, size: int, max_coord: int = 8,
                      even_bias: float = 0.75) -> GroundSet:
    """Up to ``size`` distinct points in ``{0..max_coord}^n``.

    Each point is drawn from the even sublattice with probability
    ``even_bias``, otherwise uniformly; sets with only odd points would carry
    no circuits at all.
    """
    pts = set()
    attempts = 0
    while len(pts) < size and attempts < 50 * size:
        attempts += 1
        if rng.random() < even_bias:
            p = tuple(2 * rng.randint(0, max_coord // 2) for _ in range(n))
        else:
            p = tuple(rng.randint(0, max_coord) for _ in range(n))
        pts.add(p)
    return GroundSet.of(pts, n)


def fuzz_corpus(count: int = 200, seed: int = 20240611, max_size: int = 8, max_coord: int = 8) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice((1, 2, 3))
        size = rng.randint(2, max_size)
        out.append(random_ground_set(rng, n, size, max_coord))
    return out
