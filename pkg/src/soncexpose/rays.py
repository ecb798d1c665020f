"""Extreme rays of the SONC cone and their generators."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .circuits import Circuit, circuit_number, enumerate_circuits, global_lambda, is_reduced
from .lattice import GroundSet, even_subset, is_even
from .powers import PowerProduct


class Sign(enum.IntEnum):
    MINUS = -1
    PLUS = 1

    def __str__(self):
        return "+" if self is Sign.PLUS else "-"


@dataclass(frozen=True)
class MonomialRay:
    point: tuple

    def __post_init__(self):
        if not is_even(self.point):
            raise ValueError(f"monomial ray needs an even point, got {self.point}")

    @property
    def ident(self) -> str:
        return f"monomial{list(self.point)}"


@dataclass(frozen=True)
class CircuitRay:
    circuit: Circuit
    sign: Sign

    def __post_init__(self):
        if len(self.circuit.S) < 2:
            raise ValueError("circuit rays need |S| >= 2")
        if self.sign is Sign.PLUS and self.circuit.is_even:
            raise ValueError("a positive inner term only spans an extreme ray for odd circuits")

    @property
    def ident(self) -> str:
        return f"circuit{self.circuit}{self.sign}"


ExtremeRay = Union[MonomialRay, CircuitRay]


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial with exact rational coefficients; zero terms are dropped."""

    terms: tuple  # ((point, Fraction), ...) sorted by point

    @classmethod
    def from_dict(cls, d: Mapping) -> "Polynomial":
        return cls(tuple(sorted((tuple(p), Fraction(v)) for p, v in d.items() if v != 0)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def support(self) -> tuple:
        return tuple(p for p, _ in self.terms)

    def __getitem__(self, p):
        return self.as_dict().get(tuple(p), Fraction(0))

    def evaluate(self, x) -> float:
        total = 0.0
        for p, c in self.terms:
            m = float(c)
            for xi, ei in zip(x, p):
                m *= xi ** ei
            total += m
        return total


def catalog_extreme_rays(A: GroundSet, circuits=None) -> list:
    """Monomial rays in ground-set order, then reduced circuit rays (Minus before Plus)."""
    circuits = enumerate_circuits(A) if circuits is None else circuits
    rays: list = [MonomialRay(p) for p in even_subset(A)]
    for c in circuits:
        if not is_reduced(c, A):
            continue
        rays.append(CircuitRay(c, Sign.MINUS))
        if not c.is_even:
            rays.append(CircuitRay(c, Sign.PLUS))
    return rays


def canonical_generator(r: ExtremeRay) -> Polynomial:
    """``x^gamma`` for monomial rays; ``sum lambda_a x^a +- x^beta`` for circuit rays (Theta = 1)."""
    if isinstance(r, MonomialRay):
        return Polynomial.from_dict({r.point: 1})
    terms = dict(r.circuit.weights)
    terms[r.circuit.beta] = Fraction(int(r.sign))
    return Polynomial.from_dict(terms)


@dataclass(frozen=True)
class FamilyMember:
    """``sum c_a x^a + sign * Theta(c) x^beta`` with Theta carried exactly."""

    ray: CircuitRay
    coeffs: tuple  # ((point, Fraction), ...) aligned with S
    theta: PowerProduct

    @property
    def inner_sign(self) -> int:
        return int(self.ray.sign)

    @property
    def inner_float(self) -> float:
        return self.inner_sign * self.theta.to_float()

    def polynomial(self) -> Polynomial:
        """Exact polynomial when Theta is rational (e.g. canonical coefficients)."""
        t = self.theta.exact()
        if t is None:
            raise ValueError("inner coefficient is irrational; use inner_float or theta")
        d = dict(self.coeffs)
        d[self.ray.circuit.beta] = self.inner_sign * t
        return Polynomial.from_dict(d)

    def evaluate(self, x) -> float:
        total = self.inner_float * _monomial(x, self.ray.circuit.beta)
        for p, c in self.coeffs:
            total += float(c) * _monomial(x, p)
        return total


def _monomial(x, p) -> float:
    m = 1.0
    for xi, ei in zip(x, p):
        m *= xi ** ei
    return m


def sample_family_member(r: CircuitRay, coeffs: Mapping) -> FamilyMember:
    theta = circuit_number(r.circuit, coeffs)
    norm = {tuple(k): Fraction(v) for k, v in coeffs.items()}
    return FamilyMember(r, tuple((a, norm[a]) for a in r.circuit.S), theta)


@dataclass(frozen=True)
class SoncCone:
    """Everything derived from a ground set once: circuits, reduced ones, Lambda, rays."""

    A: GroundSet
    circuits: tuple
    reduced: tuple
    Lam: int
    rays: tuple

    @classmethod
    def build(cls, A: GroundSet) -> "SoncCone":
        circuits = tuple(enumerate_circuits(A))
        reduced = tuple(c for c in circuits if is_reduced(c, A))
        rays = tuple(catalog_extreme_rays(A, circuits))
        return cls(A, circuits, reduced, global_lambda(A, circuits), rays)

    @property
    def circuit_rays(self) -> tuple:
        return tuple(r for r in self.rays if isinstance(r, CircuitRay))
