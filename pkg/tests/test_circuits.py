from fractions import Fraction

import pytest
from hypothesis import given

from oracles import brute_force_circuits
from soncexpose.circuits import (
    CircuitError,
    Parity,
    circuit_nonneg,
    circuit_number,
    enumerate_circuits,
    global_lambda,
    is_reduced,
    make_circuit,
    reduced_circuits,
)
from soncexpose.corpus import MOTZKIN, UNIVARIATE_EVEN, UNIVARIATE_ODD
from soncexpose.geometry import in_convex_hull
from soncexpose.lattice import GroundSet, even_subset
from soncexpose.powers import Ordering, power_product_compare
from strategies import ground_sets


def test_univariate_even_listing():
    cs = enumerate_circuits(UNIVARIATE_EVEN)
    assert [str(c) for c in cs] == ["({0,4},2)", "({0,6},2)", "({0,6},4)", "({2,6},4)"]
    assert cs[1].lam == (Fraction(2, 3), Fraction(1, 3))
    assert all(c.parity is Parity.EVEN for c in cs)


def test_motzkin_listing():
    (c,) = enumerate_circuits(MOTZKIN)
    assert c.S == ((0, 0), (2, 4), (4, 2)) and c.beta == (2, 2)
    assert c.lam == (Fraction(1, 3),) * 3
    assert is_reduced(c, MOTZKIN)


def test_no_circuits():
    assert enumerate_circuits(GroundSet.of([0, 2])) == []
    assert global_lambda(GroundSet.of([0, 2])) == 2


def test_reducedness():
    cs = {str(c): c for c in enumerate_circuits(UNIVARIATE_EVEN)}
    assert is_reduced(cs["({0,4},2)"], UNIVARIATE_EVEN)
    assert not is_reduced(cs["({0,6},2)"], UNIVARIATE_EVEN)
    assert [str(c) for c in reduced_circuits(UNIVARIATE_EVEN)] == ["({0,4},2)", "({2,6},4)"]


@pytest.mark.parametrize("A, expected", [(UNIVARIATE_EVEN, 4), (MOTZKIN, 4), (UNIVARIATE_ODD, 3)])
def test_global_lambda(A, expected):
    assert global_lambda(A) == expected


def test_odd_circuit_parity():
    (c,) = enumerate_circuits(UNIVARIATE_ODD)
    assert c.parity is Parity.ODD and str(c) == "({0,2},1)"


def test_circuit_numbers():
    (m,) = enumerate_circuits(MOTZKIN)
    assert power_product_compare(circuit_number(m, {a: 1 for a in m.S}), 3) is Ordering.EQUAL
    assert power_product_compare(circuit_number(m, m.weights), 1) is Ordering.EQUAL
    c = make_circuit(((0,), (4,)), (2,))
    assert power_product_compare(circuit_number(c, {(0,): 2, (4,): 2}), 4) is Ordering.EQUAL


def test_circuit_nonneg_threshold():
    (m,) = enumerate_circuits(MOTZKIN)
    unit = {a: 1 for a in m.S}
    assert circuit_nonneg(m, unit, -3)
    assert not circuit_nonneg(m, unit, -4)
    assert circuit_nonneg(m, unit, 0)
    assert circuit_nonneg(m, unit, Fraction(299, 100))


def test_bad_coefficients():
    (m,) = enumerate_circuits(MOTZKIN)
    with pytest.raises(CircuitError, match="keyed by S"):
        circuit_number(m, {(0, 0): 1})
    with pytest.raises(CircuitError, match="nonpositive"):
        circuit_number(m, {a: (0 if a == (0, 0) else 1) for a in m.S})


def test_make_circuit_rejections():
    assert make_circuit(((0,), (4,)), (4,)) is None
    assert make_circuit(((0,), (3,)), (2,)) is None  # odd outer point
    assert make_circuit(((0, 0), (2, 2), (4, 4)), (2, 2)) is None  # dependent
    assert make_circuit(((0,),), (0,)) is None


@given(ground_sets(max_size=7, max_coord=6))
def test_matches_brute_force(A):
    mine = [(c.S, c.beta, c.lam) for c in enumerate_circuits(A)]
    assert mine == brute_force_circuits(A.points)


@given(ground_sets(max_size=7, max_coord=6))
def test_lambda_dominates_every_weight(A):
    cs = enumerate_circuits(A)
    L = global_lambda(A, cs)
    assert all(L * l > 1 for c in cs for l in c.lam)
    if cs:
        assert (L - 2) * min(l for c in cs for l in c.lam) <= 1


@given(ground_sets(max_size=7, max_coord=6))
def test_reduced_hulls_hold_no_extra_even_points(A):
    for c in reduced_circuits(A):
        extra = [p for p in even_subset(A) if p not in c.S and p != c.beta and in_convex_hull(c.S, p)]
        assert not extra
