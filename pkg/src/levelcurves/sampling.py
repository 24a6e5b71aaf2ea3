"""Deterministic random instance generators for experiments and tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Tuple

from .arith import GaussianRational, GR_ONE
from .polynomials import UniPoly
from .ratfun import RatFun, rf_compose, rf_constant, rf_from_poly, rf_make


def random_gaussian_int(rng: random.Random, height: int) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-height, height)),
        Fraction(rng.randint(-height, height)),
    )


def random_unipoly(rng: random.Random, degree: int, height: int) -> UniPoly:
    """Random polynomial of exactly the given degree."""
    while True:
        coeffs = [random_gaussian_int(rng, height) for _ in range(degree + 1)]
        if not coeffs[-1].is_zero():
            return UniPoly(coeffs)


def random_ratfun(rng: random.Random, max_degree: int, height: int) -> RatFun:
    """Random nonconstant reduced rational function of degree <= max_degree."""
    while True:
        dn = rng.randint(0, max_degree)
        dd = rng.randint(0, max_degree)
        if dn == 0 and dd == 0:
            continue
        P = rf_make(
            random_unipoly(rng, dn, height), random_unipoly(rng, dd, height)
        )
        if not P.is_constant():
            return P


def random_disc_point(rng: random.Random, denominator: int = 8) -> GaussianRational:
    """Random Gaussian rational strictly inside the unit disc."""
    while True:
        a = GaussianRational(
            Fraction(rng.randint(-denominator + 1, denominator - 1), denominator),
            Fraction(rng.randint(-denominator + 1, denominator - 1), denominator),
        )
        if a.norm() < 1:
            return a


ZETA = GaussianRational(Fraction(3, 5), Fraction(4, 5))


def blaschke_factor(a: GaussianRational) -> RatFun:
    """(z - a) / (1 - conj(a) z)."""
    z = UniPoly.x()
    num = z - UniPoly.constant(a)
    den = UniPoly.one() - z.scale(a.conjugate())
    return rf_make(num, den)


def random_blaschke(rng: random.Random, max_factors: int = 3,
                    max_multiplicity: int = 3) -> RatFun:
    """Random unimodular-constant times a product of disc factors."""
    B = rf_constant(ZETA ** rng.randint(0, 3))
    for _ in range(rng.randint(1, max_factors)):
        a = random_disc_point(rng)
        B = B * blaschke_factor(a) ** rng.randint(1, max_multiplicity)
    return B


def random_blaschke_quotient(rng: random.Random) -> RatFun:
    Q = random_blaschke(rng)
    if rng.random() < 0.5:
        Q = Q / random_blaschke(rng, max_factors=2, max_multiplicity=2)
    return Q


def perturb_off_circle(rng: random.Random, Q: RatFun) -> RatFun:
    """Nudge one numerator coefficient so the map stops preserving the circle."""
    from .circlemaps import is_circle_preserving

    for attempt in range(1, 50):
        k = rng.randint(0, max(Q.num.degree, 0))
        eps = GaussianRational(Fraction(1, 7 + attempt))
        coeffs = list(Q.num.coeffs)
        while len(coeffs) <= k:
            coeffs.append(GaussianRational())
        coeffs[k] = coeffs[k] + eps
        cand = rf_make(UniPoly(coeffs), Q.den)
        if not cand.is_constant() and not is_circle_preserving(cand):
            return cand
    raise RuntimeError("could not perturb off the circle")


def random_proper_pair(rng: random.Random, height: int = 3
                       ) -> Tuple[RatFun, RatFun]:
    """Pair with coprime degrees, hence a proper parametrization."""
    degs = rng.choice([(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)])
    while True:
        P1 = random_ratfun(rng, degs[0], height)
        P2 = random_ratfun(rng, degs[1], height)
        from .ratfun import rf_degree

        if rf_degree(P1) == degs[0] and rf_degree(P2) == degs[1]:
            return P1, P2


def random_mobius(rng: random.Random, height: int = 3) -> RatFun:
    while True:
        a, b, c, d = (random_gaussian_int(rng, height) for _ in range(4))
        if not (a * d - b * c).is_zero():
            z = UniPoly.x()
            return rf_make(
                z.scale(a) + UniPoly.constant(b), z.scale(c) + UniPoly.constant(d)
            )


def random_composed_pair(rng: random.Random, max_inner_degree: int = 3,
                         height: int = 2) -> Tuple[RatFun, RatFun, RatFun]:
    """(Q1 o W, Q2 o W, W) with Q1 a Moebius map, so the inner field is
    exactly the one generated by W."""
    W = random_ratfun(rng, max_inner_degree, height)
    Q1 = random_mobius(rng, height)
    while True:
        Q2 = random_ratfun(rng, 2, height)
        if not rf_compose(Q2, W).is_constant():
            break
    return rf_compose(Q1, W), rf_compose(Q2, W), W
