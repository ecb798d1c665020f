"""Simplicial circuits on a ground set, circuit numbers and the constant Lambda."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Optional

from .geometry import affinely_independent, barycentric_coordinates, in_convex_hull
from .lattice import GroundSet, even_subset, is_even
from .powers import Ordering, PowerProduct, power_product_compare


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class CircuitError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Circuit:
    """A simplicial circuit ``(S, beta)``.

    ``S`` is a lexicographically sorted tuple of even points, ``beta`` lies in
    the relative interior of conv(S) and ``lam`` holds its barycentric
    coordinates, aligned with ``S``.  Ordering is lexicographic in ``(S, beta)``.
    """

    S: tuple
    beta: tuple
    lam: tuple = field(compare=False)

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if is_even(self.beta) else Parity.ODD

    @property
    def is_even(self) -> bool:
        return self.parity is Parity.EVEN

    @property
    def weights(self) -> dict:
        return dict(zip(self.S, self.lam))

    @property
    def key(self) -> tuple:
        return (self.S, self.beta)

    def __str__(self):
        fmt = lambda p: str(p[0]) if len(p) == 1 else str(p)
        return "({" + ",".join(fmt(a) for a in self.S) + "}," + fmt(self.beta) + ")"


@lru_cache(maxsize=1 << 16)
def _independent(S: tuple) -> bool:
    return affinely_independent(S)


@lru_cache(maxsize=1 << 16)
def make_circuit(S: tuple, beta: tuple) -> Optional[Circuit]:
    """The circuit on ``(S, beta)`` if it is one, else None.

    ``S`` must be sorted; the check covers evenness of S, affine
    independence and strict positivity of the barycentric coordinates.
    """
    if len(S) < 2 or beta in S or not all(is_even(a) for a in S):
        return None
    if not _independent(S):
        return None
    lam = barycentric_coordinates(S, beta)
    if lam is None:
        return None
    return Circuit(S, beta, tuple(lam[a] for a in S))


def enumerate_circuits(A: GroundSet) -> list:
    """All circuits ``(S, beta)`` on ``A``, sorted lexicographically by ``(S, beta)``."""
    evens = even_subset(A)
    out = []
    for k in range(2, min(A.n + 1, len(evens)) + 1):
        for S in combinations(evens, k):
            if not _independent(S):
                continue
            for beta in A.points:
                c = make_circuit(S, beta)
                if c is not None:
                    out.append(c)
    out.sort()
    return out


def is_reduced(c: Circuit, A: GroundSet) -> bool:
    """No even point of ``A`` in conv(S) other than those of ``S`` and ``beta``."""
    allowed = set(c.S) | ({c.beta} if c.is_even else set())
    for p in even_subset(A):
        if p not in allowed and in_convex_hull(c.S, p):
            return False
    return True


def reduced_circuits(A: GroundSet, circuits=None) -> list:
    circuits = enumerate_circuits(A) if circuits is None else circuits
    return [c for c in circuits if is_reduced(c, A)]


def global_lambda(A: GroundSet, circuits=None) -> int:
    """Smallest-safe integer ``Lambda = ceil(1 / lambda_min) + 1``.

    ``lambda_min`` is the least barycentric coordinate over every circuit on
    ``A``, so ``Lambda * lambda_alpha > 1`` holds for all of them.  Returns 2
    when ``A`` carries no circuit.
    """
    circuits = enumerate_circuits(A) if circuits is None else circuits
    if not circuits:
        return 2
    lam_min = min(min(c.lam) for c in circuits)
    inv = 1 / lam_min
    return math.ceil(inv) + 1


def _check_coeffs(c: Circuit, coeffs: Mapping) -> dict:
    keys = {tuple(k) for k in coeffs}
    if keys != set(c.S):
        missing = set(c.S) - keys
        extra = keys - set(c.S)
        raise CircuitError(f"coefficients must be keyed by S: missing {sorted(missing)}, extra {sorted(extra)}")
    out = {tuple(k): Fraction(v) for k, v in coeffs.items()}
    bad = [k for k, v in out.items() if v <= 0]
    if bad:
        raise CircuitError(f"nonpositive coefficient at {bad}")
    return out


def canonical_coeffs(c: Circuit) -> dict:
    return c.weights


def circuit_number(c: Circuit, coeffs: Mapping) -> PowerProduct:
    """``Theta = prod (c_alpha / lambda_alpha) ** lambda_alpha`` as an exact PowerProduct."""
    cf = _check_coeffs(c, coeffs)
    return PowerProduct(tuple((cf[a] / lam, lam) for a, lam in zip(c.S, c.lam)))


def circuit_nonneg(c: Circuit, coeffs: Mapping, d) -> bool:
    """Nonnegativity of ``sum c_alpha x^alpha + d x^beta`` via ``|d| <= Theta``."""
    theta = circuit_number(c, coeffs)
    return power_product_compare(theta, abs(Fraction(d))) is not Ordering.LESS
