"""End-to-end acceptance checks covering every advertised behavior.

Each test exercises the public library or CLI exactly as a user would and
asserts the documented tolerances, bounds, and runtime budgets.
"""

import json
import random
import time
from fractions import Fraction

from levelcurves import (
    BiPoly,
    analyze_unimodular,
    ar_accumulate,
    cayley_substitute,
    certified_roots,
    count_bound,
    implicitize,
    is_circle_preserving,
    is_finite_blaschke,
    left_compose_factor,
    luroth_generator,
    parse_bipoly,
    parse_expression,
    rf_compose,
    rf_degree,
    solve_unimodular_pair,
)
from levelcurves.circlemaps import _cayley_real
from levelcurves.cli import main
from levelcurves.curvelab import _t_coeffs, PlaneCurve
from levelcurves.polynomials import sylvester_det
from levelcurves.ratfun import rf_eval_ball, rf_from_poly
from levelcurves.sampling import (
    perturb_off_circle,
    random_blaschke,
    random_composed_pair,
    random_proper_pair,
    random_ratfun,
)

from conftest import gr, up

XY = ("x", "y")


def bp(text):
    return parse_bipoly(text, XY)


def is_associate(f, g):
    return f.normalized() == g.normalized()


def unimodularity_defect(P, ball) -> float:
    iv = rf_eval_ball(P, ball).abs_interval()
    return max(abs(float(iv.hi) - 1.0), abs(1.0 - float(iv.lo)))


def test_tangent_circle_instance(capsys):
    start = time.perf_counter()
    code = main(["solve", "z", "z+2", "--json"])
    elapsed = time.perf_counter() - start
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["status"] == "FINITE"
    assert payload["bound"] == 4
    assert len(payload["points"]) == 1
    pt = payload["points"][0]
    assert abs(pt["re"] + 1.0) <= pt["radius"] and abs(pt["im"]) <= pt["radius"]
    assert pt["radius"] < 1e-20
    assert elapsed < 1.0


def test_gcd_table_classic(capsys):
    start = time.perf_counter()
    code = main(["argcd", "z", "z+1", "--max-k", "12", "--json"])
    elapsed = time.perf_counter() - start
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    for row in payload["table"]:
        if row["k"] in (6, 12):
            assert row["gcd"] == "z^2 + z + 1"
        else:
            assert row["gcd"] == "1"
    assert payload["stabilized_F"] == "z^2 + z + 1"
    assert payload["stabilized_at"] == 6
    assert elapsed < 5.0


def test_degenerate_dichotomy():
    P1 = parse_expression("z^2")
    P2 = parse_expression("(z^2 - 1/2) / (1 - 1/2*z^2)")
    rep = solve_unimodular_pair(P1, P2)
    assert rep.status == "DEGENERATE"
    vs = rep.shared_component.vars
    target = BiPoly.monomial(gr(1), 2, 2, vs) - BiPoly.constant(gr(1), vs)
    assert is_associate(rep.shared_component, target)
    w = rep.witness
    assert w is not None and w.residual < 1e-10
    # the recovered generator is z^2 composed with a Moebius map: both the
    # numerator and denominator of W are then polynomials in z^2
    assert rf_degree(w.W) == 2
    for part in (w.W.num, w.W.den):
        assert all(part.coeff(k).is_zero() for k in range(1, part.degree + 1, 2))
    assert rf_compose(w.Q1, w.W) == P1
    assert rf_compose(w.Q2, w.W) == P2


def test_bound_property_random_pairs():
    rng = random.Random(20240817)
    finite = 0
    for _ in range(200):
        P1 = random_ratfun(rng, 3, 3)
        P2 = random_ratfun(rng, 3, 3)
        rep = solve_unimodular_pair(P1, P2)
        if rep.status != "FINITE":
            continue
        finite += 1
        assert len(rep.points) <= count_bound(P1, P2)
        for pt in rep.points:
            assert unimodularity_defect(P1, pt.z) < 1e-10
            assert unimodularity_defect(P2, pt.z) < 1e-10
    assert finite > 0


def test_blaschke_cross_validation():
    rng = random.Random(77)
    for _ in range(500):
        Q = random_blaschke(rng)
        assert is_finite_blaschke(Q)
        assert is_circle_preserving(Q) and _cayley_real(Q)
        R = perturb_off_circle(rng, Q)
        assert not is_circle_preserving(R) and not _cayley_real(R)


def test_proper_degree_law():
    rng = random.Random(5150)
    for _ in range(100):
        P1, P2 = random_proper_pair(rng)
        C = implicitize(P1, P2)
        assert C.F.deg(1) == rf_degree(P1)
        assert C.F.deg(0) == rf_degree(P2)


def test_improper_pair_power_extraction():
    P1 = rf_from_poly(up(0, 0, 1))  # z^2
    P2 = rf_from_poly(up(0, 0, 0, 0, 1))  # z^4
    raw = sylvester_det(
        _t_coeffs(P1, 0), _t_coeffs(P2, 1),
        BiPoly.zero(XY), BiPoly.constant(gr(1), XY),
    )
    minimal = bp("y - x^2")
    assert is_associate(raw, minimal * minimal)
    C = implicitize(P1, P2)
    assert is_associate(C.F, minimal)


def test_cayley_correspondence():
    assert is_associate(cayley_substitute(bp("x*y - 1")), bp("x*y + 1"))

    rep = analyze_unimodular(PlaneCurve(F=bp("x*y - 1"), degree=2))
    assert rep.verdict == "INFINITE_UNIMODULAR"
    assert rep.simple_point is not None

    rep = analyze_unimodular(PlaneCurve(F=bp("x - y - 2"), degree=1))
    assert rep.verdict == "FINITE_BOUNDED"
    assert len(rep.points) == 1
    pt = rep.points[0]
    assert pt.exact_x == gr(1) and pt.exact_y == gr(-1)


def test_decomposition_round_trip():
    P1 = rf_from_poly(up(1, 0, 1))  # z^2 + 1
    P2 = rf_from_poly(up(0, 0, 0, 0, 1))  # z^4
    W = luroth_generator(P1, P2)
    assert rf_degree(W) == 2
    for P in (P1, P2):
        Q = left_compose_factor(P, W)
        assert rf_compose(Q, W) == P

    rng = random.Random(31337)
    for _ in range(50):
        P1, P2, W = random_composed_pair(rng)
        V = luroth_generator(P1, P2)
        assert rf_degree(V) == rf_degree(W)
        for P in (P1, P2):
            Q = left_compose_factor(P, V)
            assert rf_compose(Q, V) == P


def test_cross_module_consistency():
    P1 = parse_expression("z")
    P2 = parse_expression("z + 1")
    table = ar_accumulate(P1.num, P2.num, 12)
    assert table.stabilized_F.monic() == up(1, 1, 1)
    rep = solve_unimodular_pair(P1, P2)
    assert rep.status == "FINITE"
    for root in certified_roots(table.stabilized_F):
        assert any(pt.z.contains_ball(root.location) for pt in rep.points)
    assert table.consistency


def test_monomial_dichotomy():
    rep = solve_unimodular_pair(parse_expression("z"), parse_expression("z^5"))
    assert rep.status == "DEGENERATE"
    rep = solve_unimodular_pair(parse_expression("z"), parse_expression("z^5 + z"))
    assert rep.status == "FINITE"
    assert rep.points
