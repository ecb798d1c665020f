"""Exact arithmetic on products of rational powers.

Circuit numbers are products ``prod b_i ** e_i`` with positive rational bases
and rational exponents, irrational in general, and certificate values such as
``2 ** (Lambda ** K)`` are far too large to expand.  This module decides
order relations between such quantities exactly:

1. a double-precision estimate of ``sum e_i log b_i`` settles clear cases;
2. moderate instances are settled by clearing exponent denominators and
   comparing big integers;
3. anything else is reduced over a pairwise-coprime integer basis, where
   equality is read off the exponent vector, and a nonzero log is signed with
   mpmath interval arithmetic at increasing precision.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import mpf_sign

Rational = Union[int, Fraction]

# big-integer comparison is attempted when the expanded operands stay below this many bits
_BIGINT_BITS = 1 << 18
_MAX_PREC = 1 << 16
EXPAND_LIMIT = 64


def _iv(prec: int) -> MPIntervalContext:
    # private context per call: mpmath's shared ``iv`` carries global precision
    ctx = MPIntervalContext()
    ctx.prec = prec
    return ctx


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name.capitalize()


@dataclass(frozen=True)
class PowerProduct:
    """The positive real ``prod base ** exp`` over ``factors``."""

    factors: tuple = ()

    def __post_init__(self):
        fs = tuple((Fraction(b), Fraction(e)) for b, e in self.factors)
        for b, _ in fs:
            if b <= 0:
                raise ValueError(f"power-product base must be positive, got {b}")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def of(cls, *factors) -> "PowerProduct":
        return cls(tuple(factors))

    def __mul__(self, other: "PowerProduct") -> "PowerProduct":
        return PowerProduct(self.factors + other.factors)

    def inverse(self) -> "PowerProduct":
        return PowerProduct(tuple((b, -e) for b, e in self.factors))

    def __pow__(self, k: Rational) -> "PowerProduct":
        k = Fraction(k)
        return PowerProduct(tuple((b, e * k) for b, e in self.factors))

    def normalized(self) -> "PowerProduct":
        """Merge equal bases and drop trivial factors."""
        acc: dict = {}
        for b, e in self.factors:
            if b != 1 and e != 0:
                acc[b] = acc.get(b, 0) + e
        return PowerProduct(tuple(sorted((b, e) for b, e in acc.items() if e != 0)))

    def exact(self) -> Optional[Fraction]:
        """The value as a Fraction when every exponent is a small integer."""
        out = Fraction(1)
        for b, e in self.normalized().factors:
            if e.denominator != 1 or abs(e) > EXPAND_LIMIT:
                return None
            out *= b ** int(e)
        return out

    def log(self) -> float:
        return sum(float(e) * _log(b) for b, e in self.factors)

    def to_float(self) -> float:
        """Float approximation; may overflow to ``inf`` or underflow to 0."""
        try:
            return math.exp(self.log())
        except OverflowError:
            return math.inf

    def compare(self, r: Union[Rational, "PowerProduct"]) -> Ordering:
        return power_product_compare(self, r)


def _log(q: Fraction) -> float:
    return math.log(q.numerator) - math.log(q.denominator)


def power_product_compare(v: PowerProduct, r) -> Ordering:
    """Exact ordering of ``v`` against a nonnegative rational or another PowerProduct."""
    if isinstance(r, PowerProduct):
        return _sign_of_log(v * r.inverse())
    r = Fraction(r)
    if r < 0:
        raise ValueError("comparison target must be nonnegative")
    if r == 0:
        return Ordering.GREATER
    return _sign_of_log(v * PowerProduct(((r, -1),)))


def _sign_of_log(p: PowerProduct) -> Ordering:
    """Sign of ``log(p)``: compares the product against 1."""
    fs = p.normalized().factors
    if not fs:
        return Ordering.EQUAL
    terms = [float(e) * _log(b) for b, e in fs]
    total = sum(terms)
    scale = sum(abs(t) for t in terms)
    if math.isfinite(total) and abs(total) > 1e-9 * scale + 1e-300:
        return Ordering.GREATER if total > 0 else Ordering.LESS
    exact = _bigint_sign(fs)
    if exact is not None:
        return exact
    return _coprime_sign(fs)


def _bigint_sign(fs) -> Optional[Ordering]:
    q = 1
    for _, e in fs:
        q = q * e.denominator // math.gcd(q, e.denominator)
    cost = 0
    for b, e in fs:
        cost += abs(e * q) * (b.numerator.bit_length() + b.denominator.bit_length())
        if cost > _BIGINT_BITS:
            return None
    lhs = rhs = 1
    for b, e in fs:
        k = int(e * q)
        if k > 0:
            lhs *= b.numerator ** k
            rhs *= b.denominator ** k
        else:
            lhs *= b.denominator ** -k
            rhs *= b.numerator ** -k
    return Ordering((lhs > rhs) - (lhs < rhs))


def coprime_basis(values: Iterable[int]) -> list:
    """Pairwise-coprime integers > 1 generating every input multiplicatively."""
    basis = sorted({v for v in values if v > 1})
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                a, b = basis[i], basis[j]
                g = math.gcd(a, b)
                if g > 1:
                    rest = [x for k, x in enumerate(basis) if k not in (i, j)]
                    basis = sorted(set(rest + [x for x in (g, a // g, b // g) if x > 1]))
                    changed = True
                    break
            if changed:
                break
    return basis


def _exponents_over(x: int, basis) -> dict:
    out = {}
    for q in basis:
        k = 0
        while x % q == 0:
            x //= q
            k += 1
        if k:
            out[q] = k
    if x != 1:
        raise ArithmeticError("value does not factor over the coprime basis")
    return out


def _coprime_sign(fs) -> Ordering:
    basis = coprime_basis([v for b, _ in fs for v in (b.numerator, b.denominator)])
    expo = {q: Fraction(0) for q in basis}
    for b, e in fs:
        for q, k in _exponents_over(b.numerator, basis).items():
            expo[q] += k * e
        for q, k in _exponents_over(b.denominator, basis).items():
            expo[q] -= k * e
    expo = {q: e for q, e in expo.items() if e != 0}
    if not expo:
        return Ordering.EQUAL
    # log is nonzero: distinct coprime bases are multiplicatively independent
    prec = 64
    while prec <= _MAX_PREC:
        iv = _iv(prec)
        s = iv.mpf(0)
        for q, e in expo.items():
            s += iv.log(iv.mpf(q)) * iv.mpf(e.numerator) / iv.mpf(e.denominator)
        lo, hi = s._mpi_
        if mpf_sign(lo) > 0:
            return Ordering.GREATER
        if mpf_sign(hi) < 0:
            return Ordering.LESS
        prec *= 2
    raise ArithmeticError("could not resolve sign within the precision budget")


@dataclass(frozen=True)
class SignedPower:
    """``sign * base ** exponent`` with rational ``base > 1`` and integer ``exponent >= 0``."""

    sign: int
    base: Fraction
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.base <= 1:
            raise ValueError("base must exceed 1")
        if not isinstance(self.exponent, int) or self.exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")

    def magnitude(self) -> PowerProduct:
        return PowerProduct(((self.base, self.exponent),))

    def exact(self) -> Optional[Fraction]:
        if self.exponent > EXPAND_LIMIT:
            return None
        return self.sign * self.base ** self.exponent

    def __neg__(self):
        return SignedPower(-self.sign, self.base, self.exponent)


ExactScalar = Union[Fraction, SignedPower]


def scalar_sign(v: ExactScalar) -> int:
    if isinstance(v, SignedPower):
        return v.sign
    return (v > 0) - (v < 0)


def as_power(v: ExactScalar) -> tuple:
    """Split a scalar into ``(sign, |v| as PowerProduct)``."""
    if isinstance(v, SignedPower):
        return v.sign, v.magnitude()
    v = Fraction(v)
    s = (v > 0) - (v < 0)
    return s, PowerProduct(((abs(v), 1),)) if s else PowerProduct()


def to_mpf_interval(iv: MPIntervalContext, v: ExactScalar):
    if isinstance(v, SignedPower):
        b = iv.mpf(v.base.numerator) / iv.mpf(v.base.denominator)
        return v.sign * b ** v.exponent
    v = Fraction(v)
    return iv.mpf(v.numerator) / iv.mpf(v.denominator)


class ScalarSum:
    """Exact linear combination ``sum coef_i * value_i`` of exact scalars.

    Values are rationals or :class:`SignedPower`.  Small powers are expanded;
    the sign of the remainder is decided exactly.
    """

    def __init__(self, terms: Iterable[tuple] = ()):
        self.rational = Fraction(0)
        merged: dict = {}
        for coef, val in terms:
            coef = Fraction(coef)
            if coef == 0:
                continue
            if isinstance(val, SignedPower) and val.exponent > EXPAND_LIMIT:
                key = (val.base, val.exponent)
                merged[key] = merged.get(key, 0) + coef * val.sign
            else:
                v = val.exact() if isinstance(val, SignedPower) else Fraction(val)
                self.rational += coef * v
        # (coef, SignedPower) pairs with huge exponents, identical powers merged
        self.powers = [(c, SignedPower(1, b, e)) for (b, e), c in sorted(merged.items()) if c != 0]

    def exact(self) -> Optional[Fraction]:
        return None if self.powers else self.rational

    def __eq__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        diff = ScalarSum()
        diff.rational = self.rational - Fraction(other)
        diff.powers = list(self.powers)
        return diff.sign() == 0

    __hash__ = None

    def __repr__(self):
        if not self.powers:
            return f"ScalarSum({self.rational})"
        return f"ScalarSum({self.rational} + {len(self.powers)} power terms, sign={self.sign()})"

    def sign(self) -> int:
        if not self.powers:
            return (self.rational > 0) - (self.rational < 0)
        parts = [as_power(self.rational)] if self.rational else []
        for coef, p in self.powers:
            s, mag = as_power(coef)
            parts.append((s * p.sign, mag * p.magnitude()))
        signs = {s for s, _ in parts}
        if len(signs) == 1:
            return signs.pop()
        pos = [m for s, m in parts if s > 0]
        neg = [m for s, m in parts if s < 0]
        if len(pos) == 1 and len(neg) == 1:
            return int(power_product_compare(pos[0], neg[0]))
        return self._interval_sign()

    def _interval_sign(self) -> int:
        prec = 64
        while prec <= _MAX_PREC:
            iv = _iv(prec)
            s = to_mpf_interval(iv, self.rational)
            for coef, p in self.powers:
                s += to_mpf_interval(iv, coef) * to_mpf_interval(iv, p)
            lo, hi = s._mpi_
            if mpf_sign(lo) > 0:
                return 1
            if mpf_sign(hi) < 0:
                return -1
            prec *= 2
        raise ArithmeticError("could not resolve sign of a power sum")
