from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from levelcurves import (
    BiPoly,
    GaussianRational,
    UniPoly,
    bi_gcd,
    bi_resultant,
    certified_roots,
    squarefree_decomposition,
    uni_gcd,
)
from levelcurves.polynomials import cauchy_root_bound, compose_uni

from conftest import gr, up

small_ints = st.integers(min_value=-4, max_value=4)
coeffs = st.builds(lambda a, b: gr(a, b), small_ints, small_ints)


def polys(min_degree=0, max_degree=4):
    return st.lists(coeffs, min_size=min_degree + 1, max_size=max_degree + 1).map(
        UniPoly
    )


@given(polys(1, 3), polys(1, 3), polys(0, 2))
@settings(max_examples=60, deadline=None)
def test_gcd_divides_and_absorbs_common_factor(p, q, g):
    if p.is_zero() and q.is_zero():
        return
    d = uni_gcd(p, q)
    assert d.divides(p) and d.divides(q)
    if not g.is_zero() and g.degree > 0 and not p.is_zero() and not q.is_zero():
        assert g.monic().divides(uni_gcd(p * g, q * g).monic())


@given(polys(1, 4))
@settings(max_examples=60, deadline=None)
def test_squarefree_decomposition_reconstructs(p):
    if p.is_zero():
        return
    parts = squarefree_decomposition(p)
    prod = UniPoly.constant(p.lead())
    for factor, mult in parts:
        prod = prod * factor ** mult
        d = uni_gcd(factor, factor.derivative())
        assert d.degree == 0
    assert prod.monic() == p.monic()


def test_gcd_cyclotomic():
    # gcd(z^6 - 1, z^4 + z^2 + 1) = z^2 + z + 1 times z^2 - z + 1
    a = UniPoly.x() ** 6 - UniPoly.one()
    b = up(1, 0, 1, 0, 1)
    assert uni_gcd(a, b).monic() == up(1, 0, 1, 0, 1).monic()
    assert uni_gcd(a, up(1, 1, 1)).monic() == up(1, 1, 1)


def test_bi_gcd_shared_factor():
    zw = BiPoly.monomial(gr(1), 1, 1)
    one = BiPoly.constant(gr(1))
    f = (zw - one) * (zw + one)
    g = (zw - one) * BiPoly.monomial(gr(1), 2, 0)
    d = bi_gcd(f, g)
    assert d.normalized() == (zw - one).normalized()


def test_bi_resultant_eliminates():
    # x^2 + y^2 - 1 and x - y: resultant in x is 2y^2 - 1 up to constant
    x = BiPoly.monomial(gr(1), 1, 0, ("x", "y"))
    y = BiPoly.monomial(gr(1), 0, 1, ("x", "y"))
    one = BiPoly.constant(gr(1), ("x", "y"))
    r = bi_resultant(x * x + y * y - one, x - y, "x")
    assert r.monic() == up(-1, 0, 2).monic()


def test_resultant_vanishes_iff_common_root():
    x = BiPoly.monomial(gr(1), 1, 0)
    w = BiPoly.monomial(gr(1), 0, 1)
    one = BiPoly.constant(gr(1))
    r = bi_resultant(x - w, x * x - w, "z")
    # roots w = 0, 1 correspond to the common solutions
    assert r.eval(gr(0)).is_zero() and r.eval(gr(1)).is_zero()


@given(polys(1, 3), polys(1, 2))
@settings(max_examples=40, deadline=None)
def test_composition_degree_law(p, q):
    if p.degree < 1 or q.degree < 1:
        return
    assert compose_uni(p, q).degree == p.degree * q.degree


def test_cauchy_bound_dominates_roots():
    p = up(-2, 0, 1)  # z^2 - 2
    bound = cauchy_root_bound(p)
    assert bound * bound >= 2


def test_certified_roots_exact_gaussian():
    roots = certified_roots(up(1, 0, 1))  # z^2 + 1
    exacts = sorted((r.exact.re, r.exact.im) for r in roots)
    assert exacts == [(0, -1), (0, 1)]
    assert all(r.multiplicity == 1 for r in roots)


def test_certified_roots_multiplicity_and_radius():
    p = (UniPoly.x() - UniPoly.constant(gr(Fraction(1, 3)))) ** 2 * up(2, 0, 1)
    roots = certified_roots(p, 128)
    mults = sorted(r.multiplicity for r in roots)
    assert mults == [1, 1, 2]
    third = [r for r in roots if r.multiplicity == 2][0]
    assert third.location.contains_exact(gr(Fraction(1, 3)))
    for r in roots:
        assert float(r.location.radius()) < 1e-20


def test_certified_roots_degree_nine():
    p = up(0, 1, 0, 0, 0, 1, 0, 0, 0, 1)  # z^9 + z^5 + z
    roots = certified_roots(p)
    assert sum(r.multiplicity for r in roots) == 9
    assert any(r.exact is not None and r.exact.is_zero() for r in roots)


def test_zero_polynomial_rejected():
    with pytest.raises(Exception):
        certified_roots(UniPoly.zero())


@given(polys(1, 3))
@settings(max_examples=25, deadline=None)
def test_roots_are_enclosures(p):
    if p.is_zero() or p.degree < 1:
        return
    for r in certified_roots(p):
        val = p.eval_ball(r.location)
        assert val.contains_zero()
