"""Exact rational linear algebra and polytope predicates.

Everything here is exact: Fractions at the API, gmpy2 rationals inside the
simplex tableau, no tolerances.  Convex-hull questions are answered by a
dense two-phase simplex method with Bland's anti-cycling rule.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from gmpy2 import mpq

ZERO = Fraction(0)
ONE = Fraction(1)
# the simplex tableau runs on gmpy2 rationals (exact, much faster than Fraction)
_Q0 = mpq(0)
_Q1 = mpq(1)


def _q(v) -> mpq:
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    return mpq(v)


def _frac(v: mpq) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


class GeometryError(ValueError):
    pass


def _common_dim(points) -> int:
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise GeometryError(f"dimension mismatch among points: {sorted(dims)}")
    return dims.pop() if dims else 0


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        for i in range(r + 1, len(m)):
            f = m[i][col]
            if f:
                f = f / pr[col]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        r += 1
        if r == len(m):
            break
    return r


def affinely_independent(points: Sequence[Sequence[int]]) -> bool:
    if not points:
        raise GeometryError("affine independence of an empty list is undefined")
    _common_dim(points)
    return rank([(1, *p) for p in points]) == len(points)


def solve_affine(S: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[tuple]:
    """Unique weights w with sum(w) = 1 and sum(w_i S_i) = target, or None.

    ``S`` must be affinely independent.  The weights may have any sign.
    """
    k = len(S)
    dim = _common_dim(list(S) + [target])
    # homogenized system: rows are coordinates 0..dim (with the all-ones row first)
    aug = [[ONE] * k + [ONE]]
    for j in range(dim):
        aug.append([Fraction(s[j]) for s in S] + [Fraction(target[j])])
    rows = len(aug)
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, rows) if aug[i][col] != 0), None)
        if piv is None:
            raise GeometryError("points are not affinely independent")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(rows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    if any(aug[i][k] != 0 for i in range(r, rows)):
        return None  # target outside the affine hull
    return tuple(aug[i][k] for i in range(k))


def barycentric_coordinates(S: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[dict]:
    """Barycentric coordinates of ``target`` over the simplex ``S``.

    Returns a dict ``{point: Fraction}`` when ``target`` lies in the relative
    interior of conv(S) (all weights strictly positive), otherwise ``None``.
    Raises :class:`GeometryError` if ``S`` is not affinely independent.
    """
    S = [tuple(p) for p in S]
    if not affinely_independent(S):
        raise GeometryError("points are not affinely independent")
    w = solve_affine(S, target)
    if w is None or any(x <= 0 for x in w):
        return None
    coords = dict(zip(S, w))
    assert sum(coords.values()) == 1
    assert all(sum(lam * p[j] for p, lam in coords.items()) == target[j] for j in range(len(target)))
    return coords


# -- exact simplex -----------------------------------------------------------

@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    x: Optional[list] = None


class _Tableau:
    """Dense tableau for max c.x s.t. rows.x = rhs, x >= 0, with a feasible basis."""

    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, col):
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            self.rows[r] = row = [a / piv if a else a for a in row]
            self.rhs[r] /= piv
        nz = [j for j, a in enumerate(row) if a]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = col

    def reduced_costs(self, c):
        red = list(c)
        obj = _Q0
        for i, b in enumerate(self.basis):
            cb = c[b]
            if cb:
                row = self.rows[i]
                for j, a in enumerate(row):
                    if a:
                        red[j] -= cb * a
                obj += cb * self.rhs[i]
        return red, obj

    def optimize(self, c, allowed):
        """Primal simplex with Bland's rule; returns "optimal" or "unbounded"."""
        red, _ = self.reduced_costs(c)
        while True:
            col = next((j for j in allowed if red[j] > 0), None)
            if col is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            r = best[1]
            rc = red[col]
            self.pivot(r, col)
            # pivot row is normalized, so row[col] == 1 and red[col] drops to 0
            for j, a in enumerate(self.rows[r]):
                if a:
                    red[j] -= rc * a


def linprog_exact(c, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> LPResult:
    """Maximize ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.

    Inputs may be ints or Fractions; results come back as Fractions.
    Two-phase simplex with Bland's rule throughout, so termination is
    guaranteed.
    """
    nvar = len(c)
    rows, rhs, slack_sign = [], [], []
    for a, b in zip(A_ub, b_ub):
        rows.append([_q(v) for v in a])
        rhs.append(_q(b))
        slack_sign.append(1)
    for a, b in zip(A_eq, b_eq):
        rows.append([_q(v) for v in a])
        rhs.append(_q(b))
        slack_sign.append(0)
    m = len(rows)
    n_slack = sum(1 for s in slack_sign if s)
    # columns: originals | slacks | artificials
    total = nvar + n_slack
    basis = [None] * m
    si = nvar
    for i in range(m):
        row = rows[i] + [_Q0] * n_slack
        if slack_sign[i]:
            row[si] = _Q1
            if rhs[i] >= 0:
                basis[i] = si
            si += 1
        if rhs[i] < 0:
            row = [-v for v in row]
            rhs[i] = -rhs[i]
        rows[i] = row
    art = [i for i in range(m) if basis[i] is None]
    n_art = len(art)
    for i in range(m):
        rows[i].extend([_Q0] * n_art)
    for k, i in enumerate(art):
        rows[i][total + k] = _Q1
        basis[i] = total + k
    tab = _Tableau(rows, rhs, basis)
    width = total + n_art

    if n_art:
        phase1 = [_Q0] * total + [-_Q1] * n_art
        tab.optimize(phase1, range(width))
        infeas = sum(tab.rhs[i] for i, b in enumerate(tab.basis) if b >= total)
        if infeas > 0:
            return LPResult("infeasible")
        # drive zero-level artificials out of the basis
        keep = []
        for i, b in enumerate(tab.basis):
            if b >= total:
                col = next((j for j in range(total) if tab.rows[i][j] != 0), None)
                if col is None:
                    continue  # redundant row
                tab.pivot(i, col)
            keep.append(i)
        tab.rows = [tab.rows[i][:total] for i in keep]
        tab.rhs = [tab.rhs[i] for i in keep]
        tab.basis = [tab.basis[i] for i in keep]

    cost = [_q(v) for v in c] + [_Q0] * n_slack
    status = tab.optimize(cost, range(total))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [_Q0] * total
    for i, b in enumerate(tab.basis):
        x[b] = tab.rhs[i]
    value = sum((ci * xi for ci, xi in zip(cost, x)), _Q0)
    return LPResult("optimal", _frac(value), [_frac(v) for v in x[:nvar]])


def in_convex_hull(E, p) -> bool:
    """True iff ``p`` is a convex combination of the points of ``E``."""
    E = [tuple(e) for e in E]
    if not E:
        raise GeometryError("convex hull of an empty set")
    dim = _common_dim(E + [tuple(p)])
    A_eq = [[1] * len(E)] + [[e[j] for e in E] for j in range(dim)]
    b_eq = [1] + list(p)
    return linprog_exact([0] * len(E), A_eq=A_eq, b_eq=b_eq).status != "infeasible"


def vertices(E) -> tuple:
    """Points of ``E`` that are not convex combinations of the remaining ones."""
    pts = sorted(set(tuple(e) for e in E))
    if not pts:
        raise GeometryError("vertices of an empty set")
    out = []
    for i, p in enumerate(pts):
        rest = pts[:i] + pts[i + 1:]
        if not rest or not in_convex_hull(rest, p):
            out.append(p)
    return tuple(out)
