"""Exposedness decisions and explicit exposing functionals.

A monomial ray ``x^gamma`` fails to be exposed exactly when some circuit on
the ground set uses ``gamma`` as an outer point and has an even inner point;
every other extreme ray is exposed.  For exposed rays the functionals below
are built from a graded partition: points stripped earlier from the hull get
doubly-exponentially larger values ``base ** (Lambda ** i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .circuits import Circuit, circuit_number
from .grading import GradedPartition, graded_partition
from .lattice import GroundSet, even_subset
from .powers import ExactScalar, Ordering, SignedPower, power_product_compare, scalar_sign
from .rays import CircuitRay, ExtremeRay, MonomialRay, SoncCone


class ExposureError(ValueError):
    pass


@dataclass(frozen=True)
class ExposednessDecision:
    ray: ExtremeRay
    exposed: bool
    witness: Optional[Circuit] = None


@dataclass(frozen=True)
class ExposingFunctional:
    """Values of a linear functional on the monomials of the ground set."""

    values: tuple  # ((point, ExactScalar), ...) in ground-set order

    @classmethod
    def from_dict(cls, A: GroundSet, d: Mapping) -> "ExposingFunctional":
        return cls(tuple((p, d.get(p, Fraction(0))) for p in A.points))

    def as_dict(self) -> dict:
        return dict(self.values)

    def __getitem__(self, p) -> ExactScalar:
        return self.as_dict()[tuple(p)]

    def replace(self, p, value) -> "ExposingFunctional":
        p = tuple(p)
        return ExposingFunctional(tuple((q, value if q == p else v) for q, v in self.values))

    @property
    def points(self) -> tuple:
        return tuple(p for p, _ in self.values)


@dataclass(frozen=True)
class SigmaDelta:
    sigma: Fraction
    delta: Fraction


@dataclass(frozen=True)
class Certificate:
    ray: ExtremeRay
    functional: ExposingFunctional
    lambda_used: int
    partition: GradedPartition


def _cone(A: GroundSet, cone: Optional[SoncCone]) -> SoncCone:
    if cone is None:
        return SoncCone.build(A)
    if cone.A != A:
        raise ExposureError("cone context was built for a different ground set")
    return cone


def unexposing_witnesses(gamma, cone: SoncCone) -> list:
    """Circuits with ``gamma`` in ``S`` and an even inner point, in lexicographic order."""
    gamma = tuple(gamma)
    return [c for c in cone.circuits if gamma in c.S and c.is_even]


def decide_exposed(r: ExtremeRay, A: GroundSet, cone: Optional[SoncCone] = None) -> ExposednessDecision:
    cone = _cone(A, cone)
    if r not in cone.rays:
        raise ExposureError(f"{r} is not an extreme ray of the SONC cone on this ground set")
    if isinstance(r, CircuitRay):
        return ExposednessDecision(r, True)
    witnesses = unexposing_witnesses(r.point, cone)
    if witnesses:
        return ExposednessDecision(r, False, witnesses[0])
    return ExposednessDecision(r, True)


def monomial_certificate(gamma, A: GroundSet, cone: Optional[SoncCone] = None) -> Certificate:
    cone = _cone(A, cone)
    gamma = tuple(gamma)
    ray = MonomialRay(gamma)
    if not decide_exposed(ray, A, cone).exposed:
        raise ExposureError(f"monomial ray at {gamma} is not exposed")
    P = graded_partition(even_subset(A), {gamma})
    values = {}
    for i, layer in enumerate(P.layers):
        if i == 0:
            continue
        for p in layer:
            values[p] = SignedPower(1, Fraction(2), cone.Lam ** i)
    return Certificate(ray, ExposingFunctional.from_dict(A, values), cone.Lam, P)


def expose_monomial(gamma, A: GroundSet, cone: Optional[SoncCone] = None) -> ExposingFunctional:
    """Functional vanishing on ``x^gamma`` and odd monomials, ``2 ** (Lambda ** i)`` on layer ``i``."""
    return monomial_certificate(gamma, A, cone).functional


def choose_sigma_delta(r: CircuitRay, coeffs: Mapping) -> SigmaDelta:
    """Dyadic ``sigma < min(lambda/c, 1/Theta)`` and ``delta > max(lambda/c, 1/Theta)``.

    Starts from ``sigma = 1/2``, ``delta = 2`` and halves/doubles until every
    strict inequality is certified exactly.
    """
    c = r.circuit
    theta = circuit_number(c, coeffs)
    cf = {tuple(k): Fraction(v) for k, v in coeffs.items()}
    ratios = [lam / cf[a] for a, lam in zip(c.S, c.lam)]
    lo, hi = min(ratios), max(ratios)
    sigma = Fraction(1, 2)
    # sigma < 1/Theta  <=>  Theta < 1/sigma
    while not (sigma < lo and power_product_compare(theta, 1 / sigma) is Ordering.LESS):
        sigma /= 2
    delta = Fraction(2)
    while not (delta > hi and power_product_compare(theta, 1 / delta) is Ordering.GREATER):
        delta *= 2
    return SigmaDelta(sigma, delta)


def circuit_certificate(r: CircuitRay, A: GroundSet, cone: Optional[SoncCone] = None,
                        coeffs: Optional[Mapping] = None) -> Certificate:
    cone = _cone(A, cone)
    if r not in cone.rays:
        raise ExposureError(f"{r} is not an extreme ray of the SONC cone on this ground set")
    c = r.circuit
    canon = c.weights
    if coeffs is not None and {tuple(k): Fraction(v) for k, v in coeffs.items()} != canon:
        raise ExposureError("only canonical generators (c = lambda) are supported")
    sd = choose_sigma_delta(r, canon)
    inv_sigma = 1 / sd.sigma
    P = graded_partition(set(even_subset(A)) | {c.beta}, set(c.S) | {c.beta})
    values = {a: inv_sigma for a in c.S}  # sigma^-1 * lambda/c with c = lambda
    values[c.beta] = -int(r.sign) * inv_sigma  # Theta = 1 for canonical coefficients
    for i, layer in enumerate(P.layers):
        if i == 0:
            continue
        for p in layer:
            values[p] = SignedPower(1, inv_sigma * sd.delta, cone.Lam ** i)
    return Certificate(r, ExposingFunctional.from_dict(A, values), cone.Lam, P)


def expose_circuit_ray(r: CircuitRay, A: GroundSet, cone: Optional[SoncCone] = None,
                       coeffs: Optional[Mapping] = None) -> ExposingFunctional:
    """Functional vanishing on the canonical generator of ``r`` and positive on every other ray."""
    return circuit_certificate(r, A, cone, coeffs).functional


def certify(r: ExtremeRay, A: GroundSet, cone: Optional[SoncCone] = None) -> Certificate:
    if isinstance(r, MonomialRay):
        return monomial_certificate(r.point, A, cone)
    return circuit_certificate(r, A, cone)


def negative_points(l: ExposingFunctional) -> list:
    return [p for p, v in l.values if scalar_sign(v) < 0]
