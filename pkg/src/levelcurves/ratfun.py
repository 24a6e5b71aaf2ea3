"""Rational functions over Q(i): normalization, composition, Cayley conjugation.

Canonical form is coprime numerator/denominator with monic denominator, so
coefficient-level tests (reality, equality) are meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import GR_I, GR_ONE, ComplexBall, GaussianRational
from .errors import PoleInBall, ZeroDenominator
from .polynomials import UniPoly, format_unipoly, uni_gcd


@dataclass(frozen=True)
class RatFun:
    num: UniPoly
    den: UniPoly

    def __str__(self):
        return format_ratfun(self, "z")

    def degree(self) -> int:
        return rf_degree(self)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> GaussianRational:
        return self.num.constant_value() / self.den.constant_value()

    def eval(self, z: GaussianRational) -> GaussianRational:
        return self.num.eval(z) / self.den.eval(z)

    def __eq__(self, other):
        return (
            isinstance(other, RatFun)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        other = _rf(other)
        return rf_make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other.num.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return rf_make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _rf(other) / self

    def __add__(self, other):
        other = _rf(other)
        return rf_make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _rf(other)
        return rf_make(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return _rf(other) - self

    def __neg__(self):
        return RatFun(self.num.scale(-GR_ONE), self.den)

    def __pow__(self, k: int):
        if k < 0:
            return rf_make(self.den ** (-k), self.num ** (-k))
        return rf_make(self.num ** k, self.den ** k)


def _rf(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, UniPoly):
        return rf_make(x, UniPoly.one())
    if isinstance(x, (int, Fraction, GaussianRational)):
        return rf_make(UniPoly.constant(x), UniPoly.one())
    raise TypeError(f"cannot coerce {type(x).__name__} to RatFun")


def rf_make(num: UniPoly, den: UniPoly) -> RatFun:
    """Reduce to coprime form and rescale so the denominator is monic."""
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero():
        return RatFun(UniPoly.zero(), UniPoly.one())
    g = uni_gcd(num, den)
    if not g.is_constant():
        num = num.exact_div(g)
        den = den.exact_div(g)
    lc = den.lead()
    inv = GR_ONE / lc
    return RatFun(num.scale(inv), den.scale(inv))


def rf_from_poly(p: UniPoly) -> RatFun:
    return rf_make(p, UniPoly.one())


def rf_constant(c) -> RatFun:
    return rf_make(UniPoly.constant(c), UniPoly.one())


def rf_degree(P: RatFun) -> int:
    """max(deg num, deg den); the degree of P as a self-map of the sphere."""
    return max(P.num.degree, P.den.degree, 0)


def rf_compose(P: RatFun, Q: RatFun) -> RatFun:
    """Exact P(Q(z)) via homogeneous substitution."""
    n = max(P.num.degree, P.den.degree, 0)
    a, b = Q.num, Q.den

    def subst(poly: UniPoly) -> UniPoly:
        acc = UniPoly.zero()
        for k in range(n, -1, -1):
            acc = acc * a
            c = poly.coeff(k)
            if not c.is_zero():
                acc = acc + (b ** (n - k)).scale(c)
        return acc

    return rf_make(subst(P.num), subst(P.den))


def _mobius(a, b, c, d) -> RatFun:
    """(a z + b) / (c z + d) without reduction surprises."""
    num = UniPoly((b, a))
    den = UniPoly((d, c))
    return rf_make(num, den)


# The disc-to-half-plane map T(z) = i(1+z)/(1-z) and its inverse (x-i)/(x+i).
CAYLEY_T = _mobius(GR_I, GR_I, -GR_ONE, GR_ONE)
CAYLEY_T_INV = _mobius(GR_ONE, -GR_I, GR_ONE, GR_I)


def cayley_conjugate(Q: RatFun) -> RatFun:
    """R = T o Q o T^{-1} with T the Cayley transform; degree preserved."""
    return rf_compose(rf_compose(CAYLEY_T, Q), CAYLEY_T_INV)


def cayley_conjugate_inverse(R: RatFun) -> RatFun:
    """Undo cayley_conjugate: Q = T^{-1} o R o T."""
    return rf_compose(rf_compose(CAYLEY_T_INV, R), CAYLEY_T)


def rf_is_real_up_to_reduction(R: RatFun) -> bool:
    """True iff every coefficient of the canonical form is real."""
    return all(c.is_real() for c in R.num.coeffs) and all(
        c.is_real() for c in R.den.coeffs
    )


def rf_eval_ball(P: RatFun, z: ComplexBall) -> ComplexBall:
    """Rigorous enclosure of P over the ball; PoleInBall if the denominator
    enclosure contains zero."""
    den = P.den.eval_ball(z)
    if den.contains_zero():
        raise PoleInBall("denominator enclosure contains zero")
    return P.num.eval_ball(z) / den


def format_ratfun(P: RatFun, var: str = "z") -> str:
    num = format_unipoly(P.num, var)
    if P.den == UniPoly.one():
        return num
    return f"({num}) / ({format_unipoly(P.den, var)})"
