"""Maps of the unit circle: circle-preservation, Blaschke recognition, splitting.

Circle preservation is decided exactly: Q preserves the circle iff
Q(z) * conj(Q)(1/z) is identically 1.  The same verdict is recomputed
through the Cayley transform (R = T o Q o T^{-1} has real coefficients) and
the two must agree; disagreement is an internal bug and raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import mpmath

from .arith import GR_ONE, ComplexBall, GaussianRational
from .errors import (
    CertificationFailed,
    InternalDisagreement,
    NotCirclePreserving,
)
from .polynomials import UniPoly, certified_roots, squarefree_decomposition
from .ratfun import (
    RatFun,
    cayley_conjugate,
    rf_eval_ball,
    rf_is_real_up_to_reduction,
    rf_make,
)


@dataclass
class BlaschkeForm:
    unimodular_constant: ComplexBall
    factors: List[Tuple[ComplexBall, int, bool]]  # (zero, multiplicity, inside)


def _conjugate_reflection(Q: RatFun) -> RatFun:
    """Q*(z) = conj(Q)(1/z), cleared by a common power of z."""
    n = max(Q.num.degree, Q.den.degree)
    return rf_make(Q.num.reverse_conj(n), Q.den.reverse_conj(n))


def is_circle_preserving(Q: RatFun) -> bool:
    """Exact test |Q| = 1 on the unit circle, double-checked via Cayley."""
    if Q.is_constant():
        return Q.constant_value().norm() == 1
    qstar = _conjugate_reflection(Q)
    product = Q * qstar
    algebraic = product.num == product.den and product.num.is_constant()
    cayley = _cayley_real(Q)
    if algebraic != cayley:
        raise InternalDisagreement(
            f"circle-preservation criteria disagree on {Q}: "
            f"algebraic={algebraic}, cayley={cayley}"
        )
    return algebraic


def _cayley_real(Q: RatFun) -> bool:
    if Q.is_constant() and Q.constant_value() == GR_ONE:
        return True
    return rf_is_real_up_to_reduction(cayley_conjugate(Q))


def schur_cohn_all_inside(p: UniPoly) -> bool:
    """Exact Schur-Cohn test: all roots of p strictly inside the unit disc."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    q = p.monic()
    while q.degree > 0:
        k = q.coeff(0)
        if k.norm() >= 1:
            return False
        # step-down recursion; stays exact over Q(i)
        qs = q.reverse_conj()
        num = q - qs.scale(k)
        scale = GR_ONE / (GR_ONE - k * k.conjugate())
        shifted = UniPoly(num.coeffs[1:]).scale(scale)
        q = shifted
    return True


def is_finite_blaschke(Q: RatFun) -> bool:
    """Circle-preserving with all numerator zeros strictly inside the disc."""
    if not is_circle_preserving(Q):
        return False
    if Q.num.is_constant():
        # nonzero unimodular constant over a nonconstant denominator cannot
        # be circle-preserving unless the denominator is constant too
        return Q.den.is_constant()
    return schur_cohn_all_inside(Q.num)


def _classify_ball(ball: ComplexBall, exact: GaussianRational | None) -> bool | None:
    """True if certified inside the open unit disc, False if outside, None if
    the ball straddles the circle."""
    if exact is not None:
        n = exact.norm()
        if n < 1:
            return True
        if n > 1:
            return False
        return None
    iv = ball.abs_interval()
    if iv.hi < 1:
        return True
    if iv.lo > 1:
        return False
    return None


def blaschke_quotient_split(Q: RatFun, precision_bits: int = 128,
                            max_precision_bits: int = 4096) -> BlaschkeForm:
    """Split a circle-preserving Q into zeta * B1 / B2 factor data.

    Factors with inside=True are the zeros of Q in the open disc (building
    B1); inside=False are the poles of Q in the open disc, i.e. the zeros
    of B2.  The reconstruction is ball-checked at circle samples.
    """
    if not is_circle_preserving(Q):
        raise NotCirclePreserving(f"{Q} does not preserve the unit circle")
    factors: List[Tuple[ComplexBall, int, bool]] = []
    prec = precision_bits

    def inside_roots(poly: UniPoly, inside_flag: bool):
        if poly.degree < 1:
            return
        for rb in certified_roots(poly, prec, max_precision_bits):
            side = _classify_ball(rb.location, rb.exact)
            if side is None:
                raise CertificationFailed(
                    "root ball could not be separated from the unit circle",
                    precision_cap=max_precision_bits,
                )
            if side:
                factors.append((rb.location, rb.multiplicity, inside_flag))

    inside_roots(Q.num, True)
    inside_roots(Q.den, False)
    factors.sort(key=lambda f: (f[0].center_re(), f[0].center_im(), not f[2]))

    zeta = _fit_unimodular_constant(Q, factors, prec)
    return BlaschkeForm(unimodular_constant=zeta, factors=factors)


def circle_samples(count: int, prec: int) -> List[ComplexBall]:
    """Deterministic balls containing count evenly spaced unit-circle points."""
    out = []
    with mpmath.workprec(prec + 16):
        for k in range(count):
            theta = 2 * mpmath.pi * k / count
            re = _exact(mpmath.cos(theta))
            im = _exact(mpmath.sin(theta))
            out.append(
                ComplexBall.from_exact(re, im, Fraction(1, 1 << (prec + 4)), prec)
            )
    return out


def _exact(x) -> Fraction:
    from .polynomials import _mpf_to_fraction

    return _mpf_to_fraction(x)


def _blaschke_factor_ball(zero: ComplexBall, s: ComplexBall) -> ComplexBall:
    """(s - a) / (1 - conj(a) s) evaluated in ball arithmetic."""
    a = zero
    conj_a = a.conjugate()
    one = ComplexBall.from_gaussian(GR_ONE, s.prec)
    return (s - a) / (one - conj_a * s)


def evaluate_form(form: BlaschkeForm, s: ComplexBall) -> ComplexBall:
    acc = form.unimodular_constant
    for zero, mult, inside in form.factors:
        f = _blaschke_factor_ball(zero, s)
        for _ in range(mult):
            acc = acc * f if inside else acc / f
    return acc


def _fit_unimodular_constant(Q: RatFun, factors, prec: int) -> ComplexBall:
    samples = circle_samples(8, prec)
    one = ComplexBall.from_gaussian(GR_ONE, prec)
    from .errors import PoleInBall

    for s in samples:
        try:
            qv = rf_eval_ball(Q, s)
            acc = one
            for zero, mult, inside in factors:
                f = _blaschke_factor_ball(zero, s)
                for _ in range(mult):
                    acc = acc * f if inside else acc / f
            return qv / acc
        except (ZeroDivisionError, PoleInBall):
            continue
    raise CertificationFailed("could not evaluate the unimodular constant")
