"""Solver for the simultaneous level-set system |P1(z)| = |P2(z)| = 1.

Each |P| = 1 condition is encoded algebraically by the level polynomial
L(z, w) = A(z) conj(A)(w) - B(z) conj(B)(w) with w standing for conj(z).
A nonconstant gcd of the two level polynomials whose real trace contains a
certified simple point means the solution set is a whole curve (DEGENERATE);
otherwise candidates come from a resultant and are certified one by one
(FINITE), never exceeding the (n1+n2)^2 bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .arith import ComplexBall, GaussianRational, Interval
from .config import RunConfig
from .errors import (
    BoundViolation,
    CertificationFailed,
    ConstantInput,
    WitnessFitFailed,
)
from .polynomials import BiPoly, UniPoly, bi_gcd, bi_resultant, certified_roots
from .ratfun import RatFun, rf_degree, rf_eval_ball, rf_make
from .realsolve import (
    NO_ZERO,
    PROVED_ZERO,
    curve_search_radius,
    eval_real_box,
    eval_real_point,
    find_simple_real_points,
    newton_2d,
    rational_content,
    real_trace_poly,
    refine_point,
)


@dataclass
class LevelPoly:
    poly: BiPoly  # in (z, w); w plays the role of conj(z)
    source: RatFun


@dataclass
class CertifiedPoint:
    z: ComplexBall
    residuals: Tuple[ComplexBall, ComplexBall]
    newton_certified: bool
    exact: Optional[GaussianRational] = None


@dataclass
class DegeneracyWitness:
    W: RatFun
    Q1: RatFun
    Q2: RatFun
    mobius: RatFun
    residual: float


@dataclass
class SolutionReport:
    status: str  # "FINITE" | "DEGENERATE"
    bound: int
    points: List[CertifiedPoint]
    shared_component: Optional[BiPoly] = None
    witness: Optional[DegeneracyWitness] = None


def level_poly(P: RatFun) -> LevelPoly:
    """L(z, w) = A(z) conj(A)(w) - B(z) conj(B)(w), rational content removed."""
    if P.is_constant():
        raise ConstantInput("level polynomial of a constant function")
    a = BiPoly.from_uni(P.num, 0)
    ac = BiPoly.from_uni(P.num.conj(), 1)
    b = BiPoly.from_uni(P.den, 0)
    bc = BiPoly.from_uni(P.den.conj(), 1)
    poly = a * ac - b * bc
    content = rational_content(poly)
    if content not in (0, 1):
        poly = poly.scale(GaussianRational(1 / content))
    return LevelPoly(poly=poly, source=P)


def count_bound(P1: RatFun, P2: RatFun) -> int:
    n = rf_degree(P1) + rf_degree(P2)
    return n * n


def solve_unimodular_pair(P1: RatFun, P2: RatFun,
                          config: Optional[RunConfig] = None) -> SolutionReport:
    config = config or RunConfig()
    bound = count_bound(P1, P2)

    const_report = _handle_constants(P1, P2, bound)
    if const_report is not None:
        return const_report

    L1 = level_poly(P1)
    L2 = level_poly(P2)
    g = bi_gcd(L1.poly, L2.poly)

    cof1, cof2 = L1.poly, L2.poly
    isolated_source = None
    if not g.is_constant():
        trace = real_trace_poly(g)
        pts = find_simple_real_points(
            trace, curve_search_radius(g), config.grid_resolution, want=3
        )
        if pts:
            witness = None
            try:
                witness = explain_degenerate(P1, P2, g, pts, config)
            except WitnessFitFailed:
                witness = None
            return SolutionReport(
                status="DEGENERATE",
                bound=bound,
                points=[],
                shared_component=g,
                witness=witness,
            )
        # no simple real point found: the component has no infinite trace;
        # continue finitely, keeping its (possibly empty) isolated trace
        cof1 = L1.poly.exact_div(g)
        cof2 = L2.poly.exact_div(g)
        isolated_source = g

    points = _finite_points(L1, L2, cof1, cof2, isolated_source, config)
    if len(points) > bound:
        raise BoundViolation(
            f"{len(points)} certified points exceed the bound {bound}"
        )
    points.sort(key=lambda p: (p.z.center_re(), p.z.center_im()))
    return SolutionReport(status="FINITE", bound=bound, points=points)


def _handle_constants(P1: RatFun, P2: RatFun, bound: int) -> Optional[SolutionReport]:
    c1 = P1.constant_value() if P1.is_constant() else None
    c2 = P2.constant_value() if P2.is_constant() else None
    if c1 is None and c2 is None:
        return None
    for c in (c1, c2):
        if c is not None and c.norm() != 1:
            # a non-unimodular constant level set is empty
            return SolutionReport(status="FINITE", bound=bound, points=[])
    # at least one unimodular constant: the whole level curve of the other
    # map (or the whole plane) solves the system
    other = P2 if c1 is not None else P1
    shared = level_poly(other).poly if not other.is_constant() else None
    return SolutionReport(
        status="DEGENERATE", bound=bound, points=[], shared_component=shared
    )


# ---------------------------------------------------------------------------
# FINITE path
# ---------------------------------------------------------------------------


def _candidate_poly(cof1: BiPoly, cof2: BiPoly) -> UniPoly:
    """Univariate polynomial in z whose roots cover all candidate solutions."""
    d1, d2 = cof1.deg(1), cof2.deg(1)
    if d1 <= 0 and d2 <= 0:
        # both free of w: common zeros need both z-polynomials to vanish
        u1 = cof1.to_uni(0)
        u2 = cof2.to_uni(0)
        if u1.is_constant() or u2.is_constant():
            return UniPoly.one()
        from .polynomials import uni_gcd

        return uni_gcd(u1, u2)
    if d1 <= 0:
        u = cof1.to_uni(0)
        return u if not u.is_constant() else UniPoly.one()
    if d2 <= 0:
        u = cof2.to_uni(0)
        return u if not u.is_constant() else UniPoly.one()
    return bi_resultant(cof1, cof2, "w")


def _finite_points(L1: LevelPoly, L2: LevelPoly, cof1: BiPoly, cof2: BiPoly,
                   isolated_source: Optional[BiPoly],
                   config: RunConfig) -> List[CertifiedPoint]:
    h1 = real_trace_poly(L1.poly)
    h2 = real_trace_poly(L2.poly)
    target = _target_radius(config)

    candidates: List[Tuple[Fraction, Fraction, Fraction, Optional[GaussianRational]]] = []
    resultant = _candidate_poly(cof1, cof2)
    prec = config.precision_bits
    if resultant.degree >= 1:
        for rb in certified_roots(resultant, prec, config.max_precision_bits):
            candidates.append(
                (rb.location.center_re(), rb.location.center_im(),
                 rb.location.radius(), rb.exact)
            )
    if isolated_source is not None:
        candidates.extend(_isolated_trace_candidates(isolated_source, config))

    accepted: List[CertifiedPoint] = []
    for cre, cim, rad, exact in candidates:
        pt = _certify_candidate(h1, h2, cre, cim, rad, exact, L1, L2, config, target)
        if pt is not None:
            accepted.append(pt)
    return _dedupe(accepted)


def _target_radius(config: RunConfig) -> Fraction:
    tol = Fraction(config.tolerance).limit_denominator(10 ** 30)
    return min(tol, Fraction(1, 10 ** 22))


def _certify_candidate(h1, h2, cre, cim, rad, exact, L1, L2, config,
                       target) -> Optional[CertifiedPoint]:
    # exact Gaussian-rational solutions are accepted by direct substitution
    snap = exact if exact is not None else _snap(cre, cim, rad)
    if snap is not None:
        if (
            eval_real_point(h1, snap.re, snap.im) == 0
            and eval_real_point(h2, snap.re, snap.im) == 0
        ):
            ball = ComplexBall.from_exact(snap.re, snap.im, target, config.precision_bits)
            return _finish_point(ball, snap, False, L1, L2, config)
        if exact is not None:
            return None  # exact candidate that provably misses the system

    pad = max(rad * 4, Fraction(1, 1 << (config.precision_bits // 2)))
    box_x = Interval.around(cre, pad)
    box_y = Interval.around(cim, pad)
    for _ in range(6):
        status, bx, by = newton_2d(h1, h2, box_x, box_y, target)
        if status == NO_ZERO:
            return None
        if status == PROVED_ZERO:
            ball = ComplexBall.from_exact(
                bx.mid(), by.mid(), max(bx.rad(), by.rad()) + target,
                config.precision_bits,
            )
            return _finish_point(ball, None, True, L1, L2, config)
        # inconclusive: reject rigorously if possible, else shrink/retry
        v1 = eval_real_box(h1, box_x, box_y)
        v2 = eval_real_box(h2, box_x, box_y)
        if not v1.contains(0) or not v2.contains(0):
            return None
        pad = pad / 16
        box_x = Interval.around(cre, pad)
        box_y = Interval.around(cim, pad)
    raise CertificationFailed(
        "candidate could not be certified or excluded",
        precision_cap=config.max_precision_bits,
    )


def _finish_point(ball: ComplexBall, exact, newton_certified, L1, L2,
                  config) -> CertifiedPoint:
    conj_ball = ball.conjugate()
    r1 = L1.poly.eval_ball(ball, conj_ball)
    r2 = L2.poly.eval_ball(ball, conj_ball)
    return CertifiedPoint(
        z=ball, residuals=(r1, r2), newton_certified=newton_certified, exact=exact
    )


def _snap(cre: Fraction, cim: Fraction, rad: Fraction) -> Optional[GaussianRational]:
    limit = 10 ** 8
    s = GaussianRational(
        Fraction(cre).limit_denominator(limit), Fraction(cim).limit_denominator(limit)
    )
    slack = max(rad * 2, Fraction(1, 10 ** 6))
    if abs(s.re - cre) <= slack and abs(s.im - cim) <= slack:
        return s
    return None


def _dedupe(points: List[CertifiedPoint]) -> List[CertifiedPoint]:
    out: List[CertifiedPoint] = []
    for p in points:
        merged = False
        for i, q in enumerate(out):
            if p.z.overlaps(q.z):
                if p.z.radius() < q.z.radius():
                    out[i] = p
                merged = True
                break
        if not merged:
            out.append(p)
    return out


def _isolated_trace_candidates(g: BiPoly, config: RunConfig):
    """Candidates for isolated points of the real trace of g.

    An isolated trace point is singular for the realified curve, hence a
    common zero of both partial derivatives of g in (z, w) coordinates.
    """
    gz = g.derivative(0)
    gw = g.derivative(1)
    if gz.is_zero() or gw.is_zero():
        return []
    try:
        r = _candidate_poly(gz, gw)
    except Exception:
        return []
    if r.is_zero() or r.degree < 1:
        return []
    out = []
    for rb in certified_roots(r, config.precision_bits, config.max_precision_bits):
        out.append(
            (rb.location.center_re(), rb.location.center_im(),
             rb.location.radius(), rb.exact)
        )
    return out


# ---------------------------------------------------------------------------
# degeneracy witness
# ---------------------------------------------------------------------------


def explain_degenerate(P1: RatFun, P2: RatFun, shared_component: BiPoly,
                       trace_points, config: Optional[RunConfig] = None
                       ) -> DegeneracyWitness:
    """Best-effort reconstruction P_i = Q_i o W plus a Mobius map carrying
    the unit circle onto the image circline of the shared trace under W."""
    from .circlemaps import circle_samples
    from .curvelab import left_compose_factor, luroth_generator

    config = config or RunConfig()
    if len(trace_points) < 3:
        raise WitnessFitFailed("need at least three certified trace points")
    w_fun = luroth_generator(P1, P2)
    q1 = left_compose_factor(P1, w_fun)
    q2 = left_compose_factor(P2, w_fun)

    images = _distinct_images(w_fun, trace_points, config)
    if images is None:
        raise WitnessFitFailed("could not find three distinct circline images")
    mobius = _mobius_through(images)
    if rf_degree(mobius) != 1:
        raise WitnessFitFailed("degenerate circline fit")

    residual = Fraction(0)
    comps = [rf_make(*_compose_pair(q, mobius)) for q in (q1, q2)]
    usable = 0
    for s in circle_samples(16, config.precision_bits):
        for comp in comps:
            try:
                val = rf_eval_ball(comp, s)
            except Exception:
                continue
            iv = val.abs_interval()
            dev = max(abs(iv.hi - 1), abs(1 - iv.lo))
            residual = max(residual, dev)
            usable += 1
    if usable == 0:
        raise WitnessFitFailed("all circle samples hit poles")
    res_f = float(residual)
    if res_f > max(config.tolerance, 1e-9) * 10 ** 4:
        raise WitnessFitFailed(f"witness residual {res_f:g} too large")
    return DegeneracyWitness(W=w_fun, Q1=q1, Q2=q2, mobius=mobius, residual=res_f)


def _compose_pair(q: RatFun, mobius: RatFun):
    from .ratfun import rf_compose

    comp = rf_compose(q, mobius)
    return comp.num, comp.den


def _distinct_images(w_fun: RatFun, trace_points, config):
    tight = Fraction(1, 10 ** 35)
    images = []
    for pt in trace_points:
        rp = refine_point(pt, tight)
        x, y = rp.x.mid(), rp.y.mid()
        ball = ComplexBall.from_exact(
            x, y, max(rp.x.rad(), rp.y.rad()) + tight, config.precision_bits
        )
        try:
            img = rf_eval_ball(w_fun, ball)
        except Exception:
            continue
        images.append(img.center())
    sep = Fraction(1, 10 ** 6)
    chosen = []
    for p in images:
        if all((p - q).norm() > sep * sep for q in chosen):
            chosen.append(p)
        if len(chosen) == 3:
            return chosen
    return None


def _mobius_through(points) -> RatFun:
    """The Mobius map sending (1, i, -1) to the three given points."""
    i_unit = GaussianRational.of(0, 1)
    base = (GaussianRational.of(1), i_unit, GaussianRational.of(-1))

    def std_matrix(ps):
        p1, p2, p3 = ps
        # u -> ((u - p1)(p2 - p3)) / ((u - p3)(p2 - p1)) as a 2x2 matrix
        a = p2 - p3
        b = -p1 * (p2 - p3)
        c = p2 - p1
        d = -p3 * (p2 - p1)
        return a, b, c, d

    def inv(m):
        a, b, c, d = m
        return d, -b, -c, a

    def mul(m, n):
        a, b, c, d = m
        e, f, g, h = n
        return a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h

    m = mul(inv(std_matrix(points)), std_matrix(base))
    a, b, c, d = m
    if (a * d - b * c).is_zero():
        raise WitnessFitFailed("singular Mobius fit")
    return rf_make(UniPoly((b, a)), UniPoly((d, c)))
