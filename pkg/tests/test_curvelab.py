import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from levelcurves import (
    BiPoly,
    analyze_unimodular,
    cayley_substitute,
    conj_reality_test,
    implicitize,
    left_compose_factor,
    luroth_generator,
    max_singular_points,
    parse_bipoly,
    rf_compose,
    rf_degree,
)
from levelcurves.curvelab import PlaneCurve
from levelcurves.errors import NotAFactor
from levelcurves.ratfun import rf_from_poly, rf_make
from levelcurves.sampling import random_composed_pair, random_proper_pair

from conftest import gr, up


def bp(text):
    return parse_bipoly(text, ("x", "y"))


def is_associate(f: BiPoly, g: BiPoly) -> bool:
    return f.normalized() == g.normalized()


def test_max_singular_points():
    assert [max_singular_points(d) for d in (1, 2, 3, 4)] == [0, 0, 1, 3]


def test_implicitize_unit_parabola():
    # z -> (z, z^2) lies on y = x^2
    C = implicitize(rf_from_poly(up(0, 1)), rf_from_poly(up(0, 0, 1)))
    assert is_associate(C.F, bp("y - x^2"))


def test_implicitize_constant_coordinate():
    C = implicitize(rf_from_poly(up(3)), rf_from_poly(up(0, 1)))
    assert is_associate(C.F, bp("x - 3"))


def test_implicitize_moebius_pair():
    # x = z, y = 1/z lie on xy = 1
    C = implicitize(rf_from_poly(up(0, 1)), rf_make(up(1), up(0, 1)))
    assert is_associate(C.F, bp("x*y - 1"))


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=25, deadline=None)
def test_proper_pair_degree_law(seed):
    rng = random.Random(seed)
    P1, P2 = random_proper_pair(rng)
    C = implicitize(P1, P2)
    assert C.F.deg(1) == rf_degree(P1)
    assert C.F.deg(0) == rf_degree(P2)


def test_reality_detection():
    real = bp("x*y - 1")
    res = conj_reality_test(real)
    assert res.is_real_up_to_scalar and res.lam is not None
    scaled = real.scale(gr(0, 1))  # i*(xy - 1)
    res2 = conj_reality_test(scaled)
    assert res2.is_real_up_to_scalar
    assert not conj_reality_test(bp("x + i*y + 1")).is_real_up_to_scalar


def test_cayley_substitute_hyperbola():
    G = cayley_substitute(bp("x*y - 1"))
    assert is_associate(G, bp("x*y + 1"))


def test_cayley_substitute_line():
    # the image of x + y - 3 under the circle-to-line substitution
    G = cayley_substitute(bp("x + y - 3"))
    assert not G.is_zero()
    assert G.total_degree() <= 2


def test_analyze_infinite_family():
    rep = analyze_unimodular(PlaneCurve(F=bp("x*y - 1"), degree=2))
    assert rep.verdict == "INFINITE_UNIMODULAR"
    assert rep.reality.is_real_up_to_scalar
    assert rep.simple_point is not None


def test_analyze_isolated_point():
    rep = analyze_unimodular(PlaneCurve(F=bp("x - y - 2"), degree=1))
    assert rep.verdict == "FINITE_BOUNDED"
    assert len(rep.points) == 1
    pt = rep.points[0]
    assert pt.exact_x == gr(1) and pt.exact_y == gr(-1)


def test_analyze_empty_intersection():
    rep = analyze_unimodular(PlaneCurve(F=bp("x + y - 3"), degree=1))
    assert rep.verdict == "FINITE_BOUNDED"
    assert rep.points == []


def test_luroth_power_pair():
    P1 = rf_from_poly(up(1, 0, 1))  # z^2 + 1
    P2 = rf_from_poly(up(0, 0, 0, 0, 1))  # z^4
    W = luroth_generator(P1, P2)
    assert rf_degree(W) == 2
    for P in (P1, P2):
        Q = left_compose_factor(P, W)
        assert rf_compose(Q, W) == P


def test_left_compose_factor_rejects_non_factor():
    with pytest.raises(NotAFactor):
        left_compose_factor(rf_from_poly(up(0, 0, 1)), rf_from_poly(up(0, 0, 0, 1)))


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=20, deadline=None)
def test_luroth_round_trip_random(seed):
    rng = random.Random(seed)
    P1, P2, W = random_composed_pair(rng)
    V = luroth_generator(P1, P2)
    assert rf_degree(V) == rf_degree(W)
    for P in (P1, P2):
        Q = left_compose_factor(P, V)
        assert rf_compose(Q, V) == P
