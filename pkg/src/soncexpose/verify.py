"""Exact verification of exposing certificates, plus two independent oracles.

A functional exposes a ray once it vanishes on the ray's generator and is
positive on every other extreme ray.  Circuit rays come in families
``sum c_a x^a + s Theta(c) x^beta``; by weighted AM-GM the infimum of ``l`` over
a family (normalised by ``Theta``) is ``prod l_a ** lambda_a + s l_beta`` when
all ``l_a > 0``, attained exactly on the member with ``c_a`` proportional to
``lambda_a / l_a``.  That turns each family into one exact comparison.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .circuits import Circuit, make_circuit
from .exposing import Certificate, ExposingFunctional
from .geometry import linprog_exact
from .lattice import GroundSet, even_subset, is_even
from .powers import (
    Ordering,
    PowerProduct,
    ScalarSum,
    SignedPower,
    power_product_compare,
    scalar_sign,
)
from .rays import CircuitRay, MonomialRay, Polynomial, Sign, SoncCone, canonical_generator


class VerificationError(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    target: str
    kind: str
    outcome: str
    ok: bool


@dataclass
class Verdict:
    checks: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, target, kind, outcome, ok):
        self.checks.append(Check(target, kind, str(outcome), bool(ok)))


def evaluate_on_generator(l: ExposingFunctional, g: Polynomial) -> ScalarSum:
    """``l(g) = sum coeff(a) * l(a)``, exact."""
    vals = l.as_dict()
    missing = [p for p in g.support if p not in vals]
    if missing:
        raise VerificationError(f"support escapes the ground set: {missing}")
    return ScalarSum((c, vals[p]) for p, c in g.terms)


def _magnitude(v) -> PowerProduct:
    if isinstance(v, SignedPower):
        return v.magnitude()
    return PowerProduct(((abs(Fraction(v)), 1),))


@dataclass(frozen=True)
class FamilyResult:
    ok: bool
    case: str
    detail: str


def family_positivity(l: ExposingFunctional, c: Circuit, sign: Sign, is_base_family: bool) -> FamilyResult:
    """Decide positivity of ``l`` on the whole family over circuit ``c`` with inner sign ``sign``.

    For the certified family (``is_base_family``) the infimum must be exactly
    zero instead, so that ``l`` vanishes on that ray only.
    """
    vals = l.as_dict()
    s = int(sign)
    on_S = [vals[a] for a in c.S]
    if any(scalar_sign(v) < 0 for v in on_S):
        return FamilyResult(False, "negative", "l is negative on an outer point")
    sb = s * scalar_sign(vals[c.beta])
    if all(scalar_sign(v) > 0 for v in on_S):
        # inf over the family / Theta = prod l_a^lambda_a + s * l_beta
        prod = PowerProduct(tuple(f for v, lam in zip(on_S, c.lam) for f in (_magnitude(v) ** lam).factors))
        if sb >= 0:
            if is_base_family:
                return FamilyResult(False, "amgm", "infimum is positive, expected zero")
            return FamilyResult(True, "amgm", "inner term has favourable sign")
        order = power_product_compare(prod, _magnitude(vals[c.beta]))
        if is_base_family:
            return FamilyResult(order is Ordering.EQUAL, "amgm-equality", f"prod l^lambda vs |l_beta|: {order}")
        return FamilyResult(order is Ordering.GREATER, "amgm", f"prod l^lambda vs |l_beta|: {order}")
    # some l_a == 0: shrinking the other coefficients drives everything to the beta term
    if is_base_family:
        return FamilyResult(False, "degenerate", "zero outer value on the certified family")
    if sb > 0:
        return FamilyResult(True, "degenerate", "inner term positive")
    if sb == 0 and any(scalar_sign(v) > 0 for v in on_S):
        return FamilyResult(True, "degenerate", "inner term vanishes, some outer value positive")
    return FamilyResult(False, "degenerate", "infimum is not positive")


def verify_certificate(cert: Certificate, A: GroundSet, cone: Optional[SoncCone] = None) -> Verdict:
    cone = SoncCone.build(A) if cone is None else cone
    l = cert.functional
    verdict = Verdict()
    ident = cert.ray.ident
    keyed = l.points == A.points
    verdict.add(ident, "keyed-by-A", "ok" if keyed else "functional not keyed exactly by A", keyed)
    if not keyed:
        return verdict

    val = evaluate_on_generator(l, canonical_generator(cert.ray))
    sign = val.sign()
    verdict.add(ident, "vanishes-on-ray", f"sign(l(f)) = {sign}", sign == 0)

    on_ray = cert.ray.point if isinstance(cert.ray, MonomialRay) else None
    for p in even_subset(A):
        if p == on_ray:
            continue
        s = scalar_sign(l[p])
        verdict.add(MonomialRay(p).ident, "monomial-positive", f"sign = {s}", s > 0)

    for r in cone.circuit_rays:
        res = family_positivity(l, r.circuit, r.sign, r == cert.ray)
        verdict.add(r.ident, res.case, res.detail, res.ok)
    return verdict


# -- numeric oracle ------------------------------------------------------------

@dataclass(frozen=True)
class FamilySample:
    family: str
    exact_ok: bool
    min_normalized: float
    disagrees: bool


def _mpf(v):
    if isinstance(v, SignedPower):
        return v.sign * (mpmath.mpf(v.base.numerator) / v.base.denominator) ** v.exponent
    v = Fraction(v)
    return mpmath.mpf(v.numerator) / v.denominator


def numeric_spotcheck(cert: Certificate, A: GroundSet, n_samples: int, seed: int = 0,
                      cone: Optional[SoncCone] = None) -> list:
    """Sample each circuit family and evaluate ``l(g) / scale`` in floating point.

    Coefficients are log-uniform in ``[1e-3, 1e3]``.  ``scale`` is the sum of
    absolute term contributions.  A family disagrees with the exact verdict if
    it passed but a sample dips below ``-1e-9``, or failed while every sample
    stays above ``1e-6``.
    """
    cone = SoncCone.build(A) if cone is None else cone
    rng = random.Random(seed)
    vals = cert.functional.as_dict()
    out = []
    with mpmath.workprec(96):
        lv = {p: _mpf(v) for p, v in vals.items()}
        for r in cone.circuit_rays:
            c = r.circuit
            exact_ok = family_positivity(cert.functional, c, r.sign, r == cert.ray).ok
            worst = math.inf
            for _ in range(n_samples):
                coeffs = [mpmath.mpf(10) ** rng.uniform(-3, 3) for _ in c.S]
                theta = mpmath.fprod((cf / float(lam)) ** float(lam) for cf, lam in zip(coeffs, c.lam))
                parts = [cf * lv[a] for cf, a in zip(coeffs, c.S)] + [int(r.sign) * theta * lv[c.beta]]
                scale = mpmath.fsum(abs(x) for x in parts)
                value = mpmath.fsum(parts) / scale if scale else mpmath.mpf(0)
                worst = min(worst, float(value))
            disagrees = (exact_ok and worst < -1e-9) or (not exact_ok and worst > 1e-6)
            out.append(FamilySample(r.ident, exact_ok, worst, disagrees))
    return out


# -- unexposedness probe -----------------------------------------------------------

@dataclass(frozen=True)
class ProbeResult:
    gamma: tuple
    witness: Circuit
    ts: tuple
    margins: tuple  # margins[k] uses the grid prefix ts[:k + 1]

    @property
    def final_margin(self) -> Fraction:
        return self.margins[-1]

    @property
    def monotone(self) -> bool:
        return all(b <= a for a, b in zip(self.margins, self.margins[1:]))


def _iroot(x: int, k: int) -> Optional[int]:
    """Exact integer k-th root of ``x >= 0`` or None."""
    if x < 2:
        return x
    r = 1 << -(-x.bit_length() // k)  # overestimate; Newton then decreases monotonically
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    return r if r ** k == x else None


def rational_power(t: Fraction, p: Fraction, prec: int = 256) -> Fraction:
    """``t ** p``: exact when rational, otherwise a ``prec``-bit dyadic approximation."""
    t, p = Fraction(t), Fraction(p)
    a, b = p.numerator, p.denominator
    base = t ** a
    num, den = _iroot(base.numerator, b), _iroot(base.denominator, b)
    if num is not None and den is not None:
        return Fraction(num, den)
    with mpmath.workprec(prec):
        v = mpmath.power(mpmath.mpf(t.numerator) / t.denominator, mpmath.mpf(a) / b)
        man, exp = v.man_exp
        return Fraction(man) * Fraction(2) ** exp


def f_t_polynomial(gamma, witness: Circuit, t: Fraction) -> Polynomial:
    """Member of the witness family with circuit number ``t``, keeping ``lambda_gamma`` fixed at ``x^gamma``."""
    gamma = tuple(gamma)
    lam = witness.weights
    scale = rational_power(t, 1 / (1 - lam[gamma]))
    terms = {a: (lam[a] if a == gamma else lam[a] * scale) for a in witness.S}
    terms[witness.beta] = -Fraction(t)
    return Polynomial.from_dict(terms)


def _check_witness(gamma, witness: Circuit, A: GroundSet):
    gamma = tuple(gamma)
    valid = (
        make_circuit(witness.S, witness.beta) is not None
        and all(a in A for a in witness.S)
        and witness.beta in A
        and gamma in witness.S
        and is_even(witness.beta)
        and witness.beta != gamma
    )
    if not valid:
        raise VerificationError(f"{witness} does not witness unexposedness of x^{gamma}")


def unexposedness_probe(gamma, witness: Circuit, A: GroundSet, t_grid: Sequence,
                        cone: Optional[SoncCone] = None) -> ProbeResult:
    """Best margin ``eps`` of any normalised functional killing ``x^gamma``.

    Solves ``max eps`` subject to ``l(x^gamma) = 0``, ``|l| <= 1`` entrywise and
    ``l(g) >= eps`` for every other monomial ray, every canonical circuit-ray
    generator and ``f_t`` for each ``t`` in the grid prefix.  Margins are
    reported for nested prefixes, hence non-increasing.
    """
    cone = SoncCone.build(A) if cone is None else cone
    gamma = tuple(gamma)
    if witness is None:
        raise VerificationError(f"no witness for x^{gamma}")
    _check_witness(gamma, witness, A)
    free = [p for p in A.points if p != gamma]
    pool = [Polynomial.from_dict({p: 1}) for p in even_subset(A) if p != gamma]
    pool += [canonical_generator(r) for r in cone.circuit_rays]
    ts = tuple(Fraction(t) for t in t_grid)
    margins = []
    for k in range(len(ts)):
        gens = pool + [f_t_polynomial(gamma, witness, t) for t in ts[:k + 1]]
        margins.append(_max_margin(free, gens))
    return ProbeResult(gamma, witness, ts, tuple(margins))


def _max_margin(free, gens) -> Fraction:
    # variables: p_a, q_a in [0, 1] with l_a = p_a - q_a, then eps >= 0
    m = len(free)
    idx = {p: i for i, p in enumerate(free)}
    A_ub, b_ub = [], []
    for g in gens:
        row = [Fraction(0)] * (2 * m + 1)
        for p, c in g.terms:
            if p in idx:
                row[idx[p]] -= c
                row[m + idx[p]] += c
        row[-1] = Fraction(1)
        A_ub.append(row)
        b_ub.append(0)
    for i in range(2 * m):
        row = [0] * (2 * m + 1)
        row[i] = 1
        A_ub.append(row)
        b_ub.append(1)
    res = linprog_exact([0] * (2 * m) + [1], A_ub=A_ub, b_ub=b_ub)
    if res.status != "optimal":
        raise VerificationError(f"margin LP ended with status {res.status}")
    return res.value


def default_t_grid(k_max: int = 20) -> list:
    return [Fraction(1, 2 ** k) for k in range(k_max + 1)]
