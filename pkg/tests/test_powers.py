import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from soncexpose.powers import (
    Ordering,
    PowerProduct,
    ScalarSum,
    SignedPower,
    coprime_basis,
    power_product_compare,
)

pos_q = st.fractions(min_value=Fraction(1, 12), max_value=50, max_denominator=12)
small_exp = st.fractions(min_value=-3, max_value=3, max_denominator=6)


def test_sixth_power_comparison():
    v = PowerProduct.of((2, Fraction(1, 2)), (8, Fraction(1, 3)))
    assert power_product_compare(v, 3) is Ordering.LESS
    assert str(Ordering.LESS) == "Less"


def test_base_one_is_equal_to_one():
    assert power_product_compare(PowerProduct.of((1, Fraction(2, 7))), 1) is Ordering.EQUAL


def test_motzkin_theta_equals_three():
    third = Fraction(1, 3)
    v = PowerProduct.of((3, third), (3, third), (3, third))
    assert power_product_compare(v, 3) is Ordering.EQUAL
    assert v.exact() == 3


def test_zero_and_negative_targets():
    v = PowerProduct.of((Fraction(1, 1000), 5))
    assert power_product_compare(v, 0) is Ordering.GREATER
    with pytest.raises(ValueError):
        power_product_compare(v, -1)


def test_ties_closer_than_float_resolution():
    big = 10 ** 40
    approx = Fraction(math.isqrt(2 * big * big), big)  # floor(sqrt 2) to 40 digits
    v = PowerProduct.of((2, Fraction(1, 2)))
    assert power_product_compare(v, approx) is Ordering.GREATER
    assert power_product_compare(v, approx + Fraction(1, big)) is Ordering.LESS


def test_tower_sized_exponents():
    e = 4 ** 29
    # (16/9)^e > 1 although neither side fits anywhere near a float
    assert power_product_compare(PowerProduct.of((2, 4 * e), (3, -2 * e)), 1) is Ordering.GREATER
    assert power_product_compare(PowerProduct.of((4, e), (2, -2 * e)), 1) is Ordering.EQUAL
    assert power_product_compare(PowerProduct.of((6, e), (2, -e), (3, -e)), 1) is Ordering.EQUAL


def test_compare_two_products():
    a = PowerProduct.of((2, Fraction(1, 2)))
    b = PowerProduct.of((4, Fraction(1, 4)))
    assert a.compare(b) is Ordering.EQUAL
    assert (a * a).compare(2) is Ordering.EQUAL
    assert (a ** 4).exact() == 4
    assert a.inverse().compare(Fraction(1, 2)) is Ordering.GREATER


def test_coprime_basis_factors_everything():
    basis = coprime_basis([12, 18, 35])
    assert all(math.gcd(a, b) == 1 for i, a in enumerate(basis) for b in basis[i + 1:])
    for x in (12, 18, 35):
        r = x
        for p in basis:
            while r % p == 0:
                r //= p
        assert r == 1


@given(st.lists(st.tuples(pos_q, st.integers(-4, 4)), min_size=1, max_size=4), pos_q)
def test_integer_exponents_agree_with_exact_arithmetic(factors, r):
    v = PowerProduct(tuple((b, Fraction(e)) for b, e in factors))
    exact = math.prod((Fraction(b) ** e for b, e in factors), start=Fraction(1))
    expected = Ordering.LESS if exact < r else Ordering.EQUAL if exact == r else Ordering.GREATER
    assert power_product_compare(v, r) is expected


@given(st.lists(st.tuples(pos_q, small_exp), min_size=1, max_size=4), st.integers(1, 6))
def test_raising_both_sides_preserves_order(factors, k):
    v = PowerProduct(tuple(factors))
    w = v ** k
    assert power_product_compare(w, 1) is power_product_compare(v, 1)


@given(pos_q, small_exp)
def test_antisymmetry(b, e):
    v = PowerProduct.of((b, e))
    assert int(power_product_compare(v, 1)) == -int(power_product_compare(v.inverse(), 1))


def test_signed_power_validation():
    with pytest.raises(ValueError):
        SignedPower(1, Fraction(1), 3)
    with pytest.raises(ValueError):
        SignedPower(2, Fraction(3), 3)
    p = SignedPower(-1, Fraction(4), 3)
    assert p.exact() == -64
    assert (-p).sign == 1
    assert SignedPower(1, 2, 10 ** 6).exact() is None


def test_scalar_sum_mixes_rationals_and_towers():
    huge = SignedPower(1, Fraction(4), 4 ** 6)
    assert ScalarSum([(1, huge), (-10 ** 100, Fraction(1))]).sign() == 1
    assert ScalarSum([(1, huge), (-1, huge)]).sign() == 0
    assert ScalarSum([(Fraction(1, 3), Fraction(6)), (-1, Fraction(2))]) == 0
    assert ScalarSum([]).sign() == 0


def test_scalar_sum_cancels_between_different_towers():
    a = SignedPower(1, Fraction(2), 4 ** 6)
    b = SignedPower(1, Fraction(4), 4 ** 6 // 2)  # equal to a
    assert ScalarSum([(1, a), (-1, b)]).sign() == 0
    assert ScalarSum([(1, a), (-1, b), (1, Fraction(1, 10 ** 30))]).sign() == 1
