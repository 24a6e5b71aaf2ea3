import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from levelcurves import (
    BiPoly,
    count_bound,
    level_poly,
    parse_expression,
    solve_unimodular_pair,
)
from levelcurves.errors import ConstantInput
from levelcurves.ratfun import rf_constant, rf_eval_ball, rf_from_poly
from levelcurves.sampling import random_ratfun

from conftest import gr, up


def test_level_poly_tangent_line():
    L = level_poly(parse_expression("z + 2"))
    # |z+2|^2 = 1 becomes (z+2)(w+2) - 1
    zw = L.poly
    assert zw.coeff(1, 1) == gr(1)
    assert zw.coeff(1, 0) == gr(2)
    assert zw.coeff(0, 1) == gr(2)
    assert zw.coeff(0, 0) == gr(3)


def test_level_poly_rejects_constants():
    with pytest.raises(ConstantInput):
        level_poly(rf_constant(gr(Fraction(3, 5), Fraction(4, 5))))


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=40, deadline=None)
def test_level_poly_swap_conjugate_invariant(seed):
    rng = random.Random(seed)
    P = random_ratfun(rng, 3, 3)
    L = level_poly(P).poly
    assert L.swap().conj().rename(L.vars).normalized() == L.normalized()


def test_tangent_circles_single_point():
    rep = solve_unimodular_pair(parse_expression("z"), parse_expression("z + 2"))
    assert rep.status == "FINITE"
    assert rep.bound == 4
    assert len(rep.points) == 1
    pt = rep.points[0]
    assert pt.exact == gr(-1)
    assert pt.z.contains_exact(gr(-1))
    assert float(pt.z.radius()) < 1e-20


def test_two_point_intersection():
    rep = solve_unimodular_pair(parse_expression("z"), parse_expression("z + 1"))
    assert rep.status == "FINITE"
    assert len(rep.points) == 2
    # the primitive cube roots of unity satisfy z^2 + z + 1 = 0
    cube = up(1, 1, 1)
    for pt in rep.points:
        assert cube.eval_ball(pt.z).contains_zero()


def test_disjoint_level_sets():
    rep = solve_unimodular_pair(parse_expression("z"), parse_expression("z + 4"))
    assert rep.status == "FINITE"
    assert rep.points == []


def test_identical_maps_degenerate():
    rep = solve_unimodular_pair(parse_expression("z + 2"), parse_expression("z + 2"))
    assert rep.status == "DEGENERATE"
    assert rep.shared_component is not None


def test_unimodular_constant_is_degenerate():
    rep = solve_unimodular_pair(
        rf_constant(gr(Fraction(3, 5), Fraction(4, 5))), parse_expression("z")
    )
    assert rep.status == "DEGENERATE"


def test_offcircle_constant_gives_no_points():
    rep = solve_unimodular_pair(rf_constant(gr(2)), parse_expression("z"))
    assert rep.status == "FINITE"
    assert rep.points == []


def test_degenerate_blaschke_pullback():
    P1 = parse_expression("z^2")
    P2 = parse_expression("(z^2 - 1/2) / (1 - 1/2*z^2)")
    rep = solve_unimodular_pair(P1, P2)
    assert rep.status == "DEGENERATE"
    shared = rep.shared_component.normalized()
    vs = shared.vars
    target = (BiPoly.monomial(gr(1), 2, 2, vs) - BiPoly.constant(gr(1), vs))
    assert shared == target.normalized()
    assert rep.witness is not None
    assert rep.witness.residual < 1e-10


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=12, deadline=None)
def test_random_pairs_bound_and_residual(seed):
    rng = random.Random(seed)
    P1 = random_ratfun(rng, 2, 2)
    P2 = random_ratfun(rng, 2, 2)
    rep = solve_unimodular_pair(P1, P2)
    if rep.status != "FINITE":
        return
    assert len(rep.points) <= count_bound(P1, P2)
    for pt in rep.points:
        for P in (P1, P2):
            iv = rf_eval_ball(P, pt.z).abs_interval()
            assert iv.lo <= 1 <= iv.hi or abs(float(iv.mid()) - 1) < 1e-10
