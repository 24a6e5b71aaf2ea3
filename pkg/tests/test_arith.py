from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from levelcurves import ComplexBall, GaussianRational, Interval, RectComplex, to_ball

from conftest import gr

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == gr(0)
    if not b.is_zero():
        assert (a / b) * b == a


@given(gaussians)
def test_norm_is_multiplicative(a):
    b = gr(2, -3)
    assert (a * b).norm() == a.norm() * b.norm()
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()) == GaussianRational(a.norm(), Fraction(0))


def test_unimodular_examples():
    assert gr(Fraction(3, 5), Fraction(4, 5)).norm() == 1
    assert gr(Fraction(1, 2), Fraction(1, 2)).norm() != 1


@given(fractions, fractions, fractions, fractions)
def test_interval_arithmetic_contains(xa, xb, ya, yb):
    ix = Interval(min(xa, xb), max(xa, xb))
    iy = Interval(min(ya, yb), max(ya, yb))
    assert (ix + iy).contains(ix.lo + iy.lo)
    assert (ix * iy).contains(ix.hi * iy.lo)
    assert (ix - iy).contains(ix.lo - iy.hi)


def test_interval_division_by_zero_interval():
    with pytest.raises(Exception):
        Interval(Fraction(1), Fraction(2)) / Interval(Fraction(-1), Fraction(1))


@given(gaussians, gaussians)
def test_rect_enclosure(a, b):
    ra, rb = RectComplex.point(a), RectComplex.point(b)
    assert (ra * rb).contains_point(a * b)
    assert (ra + rb).contains_point(a + b)


@given(gaussians, gaussians)
def test_ball_enclosure(a, b):
    ba, bb = to_ball(a, 64), to_ball(b, 64)
    assert (ba * bb).contains_exact(a * b)
    assert (ba - bb).contains_exact(a - b)
    if not b.is_zero():
        assert (ba / bb).contains_exact(a / b)


def test_ball_conjugate_and_abs():
    b = to_ball(gr(Fraction(3, 5), Fraction(4, 5)), 128)
    assert b.conjugate().contains_exact(gr(Fraction(3, 5), Fraction(-4, 5)))
    iv = b.abs_interval()
    assert iv.contains(Fraction(1))
    assert float(iv.hi - iv.lo) < 1e-15


def test_contains_ball_nesting():
    outer = ComplexBall.from_exact(Fraction(0), Fraction(0), Fraction(1, 4), 64)
    inner = ComplexBall.from_exact(Fraction(1, 10), Fraction(0), Fraction(1, 100), 64)
    assert outer.contains_ball(inner)
    assert not inner.contains_ball(outer)
    assert outer.overlaps(inner)
