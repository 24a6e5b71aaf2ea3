import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from levelcurves import (
    blaschke_quotient_split,
    is_circle_preserving,
    is_finite_blaschke,
    schur_cohn_all_inside,
)
from levelcurves.circlemaps import _cayley_real, circle_samples, evaluate_form
from levelcurves.errors import NotCirclePreserving
from levelcurves.ratfun import rf_from_poly, rf_make
from levelcurves.sampling import (
    blaschke_factor,
    perturb_off_circle,
    random_blaschke,
    random_blaschke_quotient,
)

from conftest import gr, up


def test_single_factor_preserves_circle():
    Q = blaschke_factor(gr(Fraction(1, 2)))
    assert is_circle_preserving(Q)
    assert is_finite_blaschke(Q)


def test_pole_inside_disc_is_not_a_product():
    # reciprocal of a Blaschke factor preserves the circle but maps the
    # disc to its exterior
    f = blaschke_factor(gr(Fraction(1, 2)))
    Q = rf_make(f.den, f.num)
    assert is_circle_preserving(Q)
    assert not is_finite_blaschke(Q)


def test_non_preserving_examples():
    assert not is_circle_preserving(rf_from_poly(up(2, 1)))  # z + 2
    assert not is_circle_preserving(rf_from_poly(up(1, 1)))  # z + 1


def test_monomials_and_constants():
    assert is_circle_preserving(rf_from_poly(up(0, 0, 1)))  # z^2
    assert not is_circle_preserving(rf_from_poly(up(0, 0, 2)))  # 2z^2


def test_schur_cohn():
    assert schur_cohn_all_inside(up(-1, 2))  # root 1/2
    assert not schur_cohn_all_inside(up(-2, 1))  # root 2
    assert not schur_cohn_all_inside(up(-1, 1))  # root on the circle
    assert schur_cohn_all_inside(up(1, 4, 8))  # roots at (-1 +- i)/4


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_criteria_agree(seed):
    rng = random.Random(seed)
    Q = random_blaschke_quotient(rng)
    assert is_circle_preserving(Q) and _cayley_real(Q)
    R = perturb_off_circle(rng, Q)
    assert not is_circle_preserving(R) and not _cayley_real(R)


def test_split_rejects_non_preserving():
    with pytest.raises(NotCirclePreserving):
        blaschke_quotient_split(rf_from_poly(up(2, 1)))


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=15, deadline=None)
def test_split_reconstruction(seed):
    rng = random.Random(seed)
    Q = random_blaschke(rng)
    form = blaschke_quotient_split(Q)
    assert all(inside for _, _, inside in form.factors)
    one = form.unimodular_constant.abs_interval()
    assert one.contains(Fraction(1))
    for s in circle_samples(8, 128):
        lhs = evaluate_form(form, s)
        rhs = Q.num.eval_ball(s) / Q.den.eval_ball(s)
        assert lhs.overlaps(rhs)


def test_split_separates_zeros_and_poles():
    B1 = blaschke_factor(gr(Fraction(1, 2)))
    B2 = blaschke_factor(gr(0, Fraction(1, 3)))
    Q = rf_make(B1.num * B2.den, B1.den * B2.num)
    form = blaschke_quotient_split(Q)
    sides = sorted(inside for _, _, inside in form.factors)
    assert sides == [False, True]
    for zero, _, inside in form.factors:
        target = gr(Fraction(1, 2)) if inside else gr(0, Fraction(1, 3))
        assert zero.contains_exact(target)
