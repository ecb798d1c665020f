from fractions import Fraction

import pytest
from hypothesis import given, settings

from soncexpose.circuits import enumerate_circuits, make_circuit
from soncexpose.corpus import MOTZKIN, UNIVARIATE_EVEN, UNIVARIATE_ODD
from soncexpose.exposing import Certificate, ExposingFunctional, certify, decide_exposed, monomial_certificate
from soncexpose.grading import graded_partition
from soncexpose.lattice import GroundSet, even_subset
from soncexpose.powers import SignedPower
from soncexpose.rays import CircuitRay, MonomialRay, Polynomial, Sign, SoncCone, canonical_generator
from soncexpose.verify import (
    VerificationError,
    default_t_grid,
    evaluate_on_generator,
    family_positivity,
    f_t_polynomial,
    numeric_spotcheck,
    rational_power,
    unexposedness_probe,
    verify_certificate,
)
from strategies import ground_sets


def _motzkin_cert():
    cone = SoncCone.build(MOTZKIN)
    return certify(cone.circuit_rays[0], MOTZKIN, cone), cone


def _tamper(cert, p, v):
    return Certificate(cert.ray, cert.functional.replace(p, v), cert.lambda_used, cert.partition)


def test_evaluation_on_generators():
    cert, _ = _motzkin_cert()
    assert evaluate_on_generator(cert.functional, canonical_generator(cert.ray)) == 0
    l = monomial_certificate((0,), UNIVARIATE_ODD).functional
    assert evaluate_on_generator(l, canonical_generator(MonomialRay((2,)))) == 8
    assert evaluate_on_generator(l, Polynomial.from_dict({})) == 0
    with pytest.raises(VerificationError):
        evaluate_on_generator(l, Polynomial.from_dict({(6,): 1}))


def test_family_cases():
    l = monomial_certificate((0,), UNIVARIATE_ODD).functional
    c = make_circuit(((0,), (2,)), (1,))
    res = family_positivity(l, c, Sign.PLUS, False)
    assert res.ok and res.case == "degenerate"

    cert, _ = _motzkin_cert()
    res = family_positivity(cert.functional, cert.ray.circuit, Sign.MINUS, True)
    assert res.ok and res.case == "amgm-equality"

    c = make_circuit(((0,), (4,)), (2,))
    cone = SoncCone.build(UNIVARIATE_EVEN)
    cert = certify(CircuitRay(c, Sign.MINUS), UNIVARIATE_EVEN, cone)
    other = make_circuit(((2,), (6,)), (4,))
    assert family_positivity(cert.functional, other, Sign.MINUS, False).ok


@pytest.mark.parametrize("A", [UNIVARIATE_ODD, MOTZKIN, UNIVARIATE_EVEN], ids=["odd", "motzkin", "even"])
def test_every_golden_certificate_verifies(A):
    cone = SoncCone.build(A)
    for r in cone.rays:
        if decide_exposed(r, A, cone).exposed:
            assert verify_certificate(certify(r, A, cone), A, cone).passed


def test_tampered_certificates_fail():
    cert, cone = _motzkin_cert()
    v = verify_certificate(_tamper(cert, (2, 2), Fraction(3)), MOTZKIN, cone)
    assert not v.passed
    assert any(f.kind == "amgm-equality" for f in v.failures)

    cert = monomial_certificate((0,), UNIVARIATE_ODD)
    v = verify_certificate(_tamper(cert, (2,), Fraction(0)), UNIVARIATE_ODD)
    assert any(f.kind == "monomial-positive" for f in v.failures)


def test_functional_keyed_by_another_set_fails():
    cert, cone = _motzkin_cert()
    short = ExposingFunctional(cert.functional.values[:-1])
    v = verify_certificate(Certificate(cert.ray, short, cert.lambda_used, cert.partition), MOTZKIN, cone)
    assert [f.kind for f in v.failures] == ["keyed-by-A"]


def test_forced_certificate_for_unexposed_monomial_fails():
    # the tower construction applied to gamma = 4 anyway; the witness family catches it
    A = UNIVARIATE_EVEN
    cone = SoncCone.build(A)
    P = graded_partition(even_subset(A), {(4,)})
    values = {p: SignedPower(1, Fraction(2), cone.Lam ** i) for i, layer in enumerate(P.layers) if i
              for p in layer}
    cert = Certificate(MonomialRay((4,)), ExposingFunctional.from_dict(A, values), cone.Lam, P)
    v = verify_certificate(cert, A, cone)
    assert any(f.target == "circuit({0,4},2)-" for f in v.failures)


def test_spotcheck_agrees_with_exact_verdicts():
    cert, cone = _motzkin_cert()
    samples = numeric_spotcheck(cert, MOTZKIN, 100, seed=1, cone=cone)
    assert all(s.exact_ok and not s.disagrees for s in samples)
    bad = numeric_spotcheck(_tamper(cert, (2, 2), Fraction(3)), MOTZKIN, 100, seed=1, cone=cone)
    assert any(s.min_normalized < 0 for s in bad)
    assert not any(s.disagrees for s in bad)


def test_spotcheck_without_circuits_is_empty():
    A = GroundSet.of([(0, 0), (2, 2)])
    cert = monomial_certificate((0, 0), A)
    assert numeric_spotcheck(cert, A, 10) == []


def test_rational_power():
    assert rational_power(Fraction(1, 4), Fraction(3, 2)) == Fraction(1, 8)
    approx = rational_power(Fraction(1, 2), Fraction(1, 2))
    assert abs(approx * approx - Fraction(1, 2)) < Fraction(1, 2 ** 250)


def test_f_t_stays_on_the_boundary():
    c = make_circuit(((0,), (4,)), (2,))
    f = f_t_polynomial((4,), c, Fraction(1, 16))
    # Theta of f_t equals t: (c0/lam0)^(1/2) (c4/lam4)^(1/2) with c4 = lam4
    assert f[(2,)] == Fraction(-1, 16)
    assert f[(4,)] == Fraction(1, 2)
    assert f[(0,)] == Fraction(1, 2) * Fraction(1, 256)


def test_probe_on_univariate_even():
    A = UNIVARIATE_EVEN
    d = decide_exposed(MonomialRay((4,)), A)
    res = unexposedness_probe((4,), d.witness, A, default_t_grid(20))
    assert res.final_margin <= Fraction(1, 10 ** 6)
    assert res.monotone
    coarse = unexposedness_probe((4,), d.witness, A, [1])
    assert coarse.final_margin > 0


def test_probe_rejects_invalid_witness():
    c = make_circuit(((0,), (2,)), (1,))
    with pytest.raises(VerificationError):
        unexposedness_probe((2,), c, UNIVARIATE_ODD, default_t_grid(3))
    with pytest.raises(VerificationError):
        unexposedness_probe((2,), None, UNIVARIATE_ODD, default_t_grid(3))


@settings(max_examples=25)
@given(ground_sets(max_size=7, max_coord=8))
def test_round_trip_on_random_sets(A):
    cone = SoncCone.build(A)
    for r in cone.rays:
        if decide_exposed(r, A, cone).exposed:
            assert verify_certificate(certify(r, A, cone), A, cone).passed
