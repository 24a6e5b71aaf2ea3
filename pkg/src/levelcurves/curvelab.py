"""Plane-curve analysis for unimodular points.

Implicitization of parametrized curves, reality-up-to-scalar normalization,
the Cayley substitution that turns unimodular-point questions into real-point
questions, the d^2 counting analysis, and Lueroth decomposition of a pair of
rational functions into a common inner factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .arith import ComplexBall, GaussianRational, GR_I, GR_ONE, GR_ZERO
from .config import RunConfig
from .errors import (
    BothConstant,
    CertificationFailed,
    ImagePoint,
    NotAFactor,
    SharedComponentUnresolved,
    ZeroPolynomial,
)
from .polynomials import (
    BiPoly,
    UniPoly,
    bi_gcd,
    bi_resultant,
    certified_roots,
    sylvester_det,
    uni_gcd,
)
from .ratfun import RatFun, rf_compose, rf_degree, rf_make
from .realsolve import (
    RealCurvePoint,
    curve_search_radius,
    find_simple_real_points,
    rational_content,
)

XY = ("x", "y")


@dataclass
class PlaneCurve:
    F: BiPoly
    degree: int
    assumed_irreducible: bool = True


@dataclass
class RealityResult:
    is_real_up_to_scalar: bool
    lam: Optional[GaussianRational] = None
    note: Optional[str] = None


@dataclass
class CurvePoint:
    x: ComplexBall
    y: ComplexBall
    exact_x: Optional[GaussianRational] = None
    exact_y: Optional[GaussianRational] = None


@dataclass
class CurveReport:
    verdict: str  # "FINITE_BOUNDED" | "INFINITE_UNIMODULAR"
    bound: int
    reality: RealityResult
    assumed_irreducible: bool
    simple_point: Optional[RealCurvePoint] = None
    points: List[CurvePoint] = field(default_factory=list)


def max_singular_points(d: int) -> int:
    if d < 1:
        raise ValueError("degree must be positive")
    return (d - 1) * (d - 2) // 2


# ---------------------------------------------------------------------------
# implicitization
# ---------------------------------------------------------------------------


def _t_coeffs(P: RatFun, which: int) -> List[BiPoly]:
    """High-first coefficient list in t of A(t) - v*B(t), v the image variable."""
    d = max(P.num.degree, P.den.degree)
    out = []
    for k in range(d, -1, -1):
        a = BiPoly.constant(P.num.coeff(k), XY)
        b = BiPoly.monomial(P.den.coeff(k), 1 - which, which, XY)
        out.append(a - b)
    return out


def _squarefree_part(F: BiPoly) -> BiPoly:
    g = F
    for which in (0, 1):
        d = F.derivative(which)
        if not d.is_zero():
            g = bi_gcd(g, d)
    if g is F:
        raise ImagePoint("implicit equation degenerated to a constant")
    if g.is_constant():
        return F
    return F.exact_div(g)


def implicitize(P1: RatFun, P2: RatFun) -> PlaneCurve:
    """Minimal implicit equation F(x, y) = 0 of z -> (P1(z), P2(z)).

    The raw resultant is a power of the minimal polynomial when the
    parametrization is improper; the power is stripped off afterwards.
    """
    if P1.is_constant() and P2.is_constant():
        raise ImagePoint("the image of a constant pair is a single point")
    if P1.is_constant():
        c = P1.constant_value()
        F = BiPoly.monomial(GR_ONE, 1, 0, XY) - BiPoly.constant(c, XY)
    elif P2.is_constant():
        c = P2.constant_value()
        F = BiPoly.monomial(GR_ONE, 0, 1, XY) - BiPoly.constant(c, XY)
    else:
        raw = sylvester_det(
            _t_coeffs(P1, 0), _t_coeffs(P2, 1),
            BiPoly.zero(XY), BiPoly.constant(GR_ONE, XY),
        )
        if raw.is_zero() or raw.is_constant():
            raise ImagePoint("elimination produced no curve equation")
        F = _squarefree_part(raw)
    content = rational_content(F)
    if content not in (0, 1):
        F = F.scale(GaussianRational.of(1 / content))
    F = F.normalized()
    return PlaneCurve(F=F, degree=F.total_degree(), assumed_irreducible=True)


# ---------------------------------------------------------------------------
# reality up to a scalar
# ---------------------------------------------------------------------------


def _fraction_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def conj_reality_test(F: BiPoly) -> RealityResult:
    """Decide whether some scalar multiple of F has real coefficients.

    If conj(F) = c*F consistently, c is automatically unimodular and the
    normalizing scalar is any lambda with lambda^2 = c; lambda may fail to
    exist in Q(i), in which case reality is reported without it.
    """
    if F.is_zero():
        raise ZeroPolynomial("reality test of the zero polynomial")
    conj = F.conj()
    c = None
    for key, coeff in F.terms.items():
        ratio = conj.terms.get(key, GR_ZERO) / coeff
        if c is None:
            c = ratio
        elif c != ratio:
            return RealityResult(is_real_up_to_scalar=False)
    if set(conj.terms) != set(F.terms):
        return RealityResult(is_real_up_to_scalar=False)
    # lambda^2 = c with |lambda| = 1: real part from (1 + Re c)/2
    xsq = (1 + c.re) / 2
    ysq = (1 - c.re) / 2
    rx, ry = _fraction_sqrt(xsq), _fraction_sqrt(ysq)
    if rx is None or ry is None:
        return RealityResult(
            is_real_up_to_scalar=True,
            note="normalizing scalar lies outside Q(i)",
        )
    if 2 * rx * ry != c.im:
        ry = -ry
    lam = GaussianRational(rx, ry)
    if lam * lam != c:
        return RealityResult(
            is_real_up_to_scalar=True,
            note="normalizing scalar lies outside Q(i)",
        )
    return RealityResult(is_real_up_to_scalar=True, lam=lam)


# ---------------------------------------------------------------------------
# Cayley substitution
# ---------------------------------------------------------------------------


def cayley_substitute(G: BiPoly) -> BiPoly:
    """Numerator of G(T(x), T(y)) with T(u) = i(1+u)/(1-u), cleared and
    normalized; real points of the result encode unimodular points of G."""
    if G.is_zero():
        raise ZeroPolynomial("Cayley substitution of the zero polynomial")
    dx, dy = max(G.deg(0), 0), max(G.deg(1), 0)
    vs = G.vars
    one = BiPoly.constant(GR_ONE, vs)
    xv = BiPoly.monomial(GR_ONE, 1, 0, vs)
    yv = BiPoly.monomial(GR_ONE, 0, 1, vs)
    num_x = (one + xv).scale(GR_I)
    den_x = one - xv
    num_y = (one + yv).scale(GR_I)
    den_y = one - yv

    def powers(p: BiPoly, n: int) -> List[BiPoly]:
        out = [one]
        for _ in range(n):
            out.append(out[-1] * p)
        return out

    nx, dxp = powers(num_x, dx), powers(den_x, dx)
    ny, dyp = powers(num_y, dy), powers(den_y, dy)
    acc = BiPoly.zero(vs)
    for (i, j), c in G.terms.items():
        acc = acc + (nx[i] * dxp[dx - i] * ny[j] * dyp[dy - j]).scale(c)
    if acc.is_zero():
        return acc
    return acc.normalized()


# ---------------------------------------------------------------------------
# unimodular-point analysis
# ---------------------------------------------------------------------------


def _real_scaled(F: BiPoly, reality: RealityResult) -> BiPoly:
    """A real-coefficient scalar multiple of F, given reality holds."""
    if reality.lam is not None:
        return F.scale(reality.lam)
    re_terms = {k: GaussianRational(c.re) for k, c in F.terms.items() if c.re != 0}
    if re_terms:
        return BiPoly(re_terms, F.vars)
    return BiPoly(
        {k: GaussianRational(c.im) for k, c in F.terms.items() if c.im != 0}, F.vars
    )


def _star_poly(F: BiPoly) -> BiPoly:
    """conj(F) with (x, y) -> (1/x, 1/y), cleared by x^dx y^dy."""
    dx, dy = F.deg(0), F.deg(1)
    return BiPoly(
        {(dx - i, dy - j): c.conjugate() for (i, j), c in F.terms.items()}, F.vars
    )


def _common_poly(F: BiPoly, G: BiPoly, eliminate: str) -> UniPoly:
    main = F.vars.index(eliminate)
    if F.deg(main) <= 0 and G.deg(main) <= 0:
        u1, u2 = F.to_uni(1 - main), G.to_uni(1 - main)
        if u1.is_constant() or u2.is_constant():
            return UniPoly.one()
        return uni_gcd(u1, u2)
    if F.deg(main) <= 0:
        u = F.to_uni(1 - main)
        return u if not u.is_constant() else UniPoly.one()
    if G.deg(main) <= 0:
        u = G.to_uni(1 - main)
        return u if not u.is_constant() else UniPoly.one()
    return bi_resultant(F, G, eliminate)


def _subst_var(F: BiPoly, which: int, value: GaussianRational) -> UniPoly:
    acc = {}
    for (i, j), c in F.terms.items():
        e = (i, j)[1 - which]
        acc[e] = acc.get(e, GR_ZERO) + c * value ** (i, j)[which]
    if not acc:
        return UniPoly.zero()
    cs = [GR_ZERO] * (max(acc) + 1)
    for e, c in acc.items():
        cs[e] = c
    return UniPoly(cs)


def analyze_unimodular(C: PlaneCurve, config: Optional[RunConfig] = None) -> CurveReport:
    config = config or RunConfig()
    F = C.F
    if F.is_zero():
        raise ZeroPolynomial("cannot analyze the zero curve")
    bound = C.degree * C.degree
    ghat = cayley_substitute(F)
    reality = (
        conj_reality_test(ghat)
        if not ghat.is_zero()
        else RealityResult(is_real_up_to_scalar=False)
    )

    if reality.is_real_up_to_scalar:
        h = _real_scaled(ghat, reality)
        pts = find_simple_real_points(
            h, curve_search_radius(h), config.grid_resolution, want=1
        )
        if pts:
            return CurveReport(
                verdict="INFINITE_UNIMODULAR",
                bound=bound,
                reality=reality,
                assumed_irreducible=C.assumed_irreducible,
                simple_point=pts[0],
            )

    star = _star_poly(F)
    shared = bi_gcd(F, star)
    if not shared.is_constant():
        raise SharedComponentUnresolved(
            "curve shares a component with its circle-conjugate "
            "but no simple real point was certified within budget"
        )
    points = _enumerate_torus_points(F, star, config)
    return CurveReport(
        verdict="FINITE_BOUNDED",
        bound=bound,
        reality=reality,
        assumed_irreducible=C.assumed_irreducible,
        points=points,
    )


def _enumerate_torus_points(F: BiPoly, star: BiPoly, config: RunConfig) -> List[CurvePoint]:
    rx = _common_poly(F, star, "y")
    if rx.is_zero():
        raise SharedComponentUnresolved("elimination collapsed; shared factor suspected")
    points: List[CurvePoint] = []
    if rx.is_constant():
        return points
    for xb in certified_roots(rx, config.precision_bits, config.max_precision_bits):
        if xb.exact is None:
            if not xb.location.abs_interval().contains(Fraction(1)):
                continue
            raise CertificationFailed(
                "non-rational candidate near |x| = 1 could not be decided",
                precision_cap=config.max_precision_bits,
            )
        x0 = xb.exact
        if x0.norm() != 1:
            continue
        fy = _subst_var(F, 0, x0)
        sy = _subst_var(star, 0, x0)
        if fy.is_zero() or sy.is_zero():
            raise SharedComponentUnresolved(
                "curve contains a vertical line through a unimodular abscissa"
            )
        if fy.is_constant() or sy.is_constant():
            continue
        gy = uni_gcd(fy, sy)
        if gy.is_constant():
            continue
        for yb in certified_roots(gy, config.precision_bits, config.max_precision_bits):
            if yb.exact is None:
                if not yb.location.abs_interval().contains(Fraction(1)):
                    continue
                raise CertificationFailed(
                    "non-rational candidate near |y| = 1 could not be decided",
                    precision_cap=config.max_precision_bits,
                )
            y0 = yb.exact
            if y0.norm() != 1:
                continue
            if F.eval_gr(x0, y0).is_zero() and star.eval_gr(x0, y0).is_zero():
                points.append(
                    CurvePoint(
                        x=ComplexBall.from_gaussian(x0, config.precision_bits),
                        y=ComplexBall.from_gaussian(y0, config.precision_bits),
                        exact_x=x0,
                        exact_y=y0,
                    )
                )
    points.sort(key=lambda p: (p.exact_x.sort_key(), p.exact_y.sort_key()))
    return points


# ---------------------------------------------------------------------------
# Lueroth decomposition
# ---------------------------------------------------------------------------


def _difference_numerator(P: RatFun) -> BiPoly:
    """Numerator of P(y) - P(x) as a BiPoly in (x, y)."""
    ay = BiPoly.from_uni(P.num, 1, XY)
    by = BiPoly.from_uni(P.den, 1, XY)
    ax = BiPoly.from_uni(P.num, 0, XY)
    bx = BiPoly.from_uni(P.den, 0, XY)
    return ay * bx - ax * by


def luroth_generator(P1: RatFun, P2: RatFun) -> RatFun:
    """A rational W(x) generating the field Q(i)(P1, P2).

    W is read off the minimal polynomial H(x, y) of y over that field: H is
    the gcd in y of the numerators of P_i(y) - P_i(x), and any nonconstant
    ratio of its y-coefficients generates the field.
    """
    parts = [_difference_numerator(P) for P in (P1, P2) if not P.is_constant()]
    if not parts:
        raise BothConstant("no field is generated by two constants")
    H = parts[0]
    for part in parts[1:]:
        H = bi_gcd(H, part)
    cols = H.coeff_list(1)  # index = power of y, entries UniPoly in x
    lead = cols[-1]
    for k in range(len(cols) - 2, -1, -1):
        W = rf_make(cols[k], lead)
        if not W.is_constant():
            return W
    raise BothConstant("inputs generate a trivial field")


def _nullspace_vector(rows: List[List[GaussianRational]], width: int
                      ) -> List[List[GaussianRational]]:
    """Basis of the nullspace of the given matrix over Q(i)."""
    m = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = GR_ONE / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [GR_ZERO] * width
        v[fc] = GR_ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -m[row_idx][fc]
        basis.append(v)
    return basis


def left_compose_factor(P: RatFun, W: RatFun) -> RatFun:
    """Q with Q o W = P, or NotAFactor.

    Composition is linear in the unknown coefficients of Q once cleared by
    den(W)^deg(Q), so Q is a nullspace vector of an exact linear system.
    """
    dw = rf_degree(W)
    dp = rf_degree(P)
    if dw == 0:
        raise NotAFactor("inner function is constant")
    if dp % dw != 0:
        raise NotAFactor("degree of the inner function does not divide")
    m = dp // dw

    aw, bw = W.num, W.den
    basis = [UniPoly.one()]
    for _ in range(m):
        basis.append(basis[-1] * aw)
    for k in range(m + 1):
        for _ in range(m - k):
            basis[k] = basis[k] * bw
    # basis[k] = aw^k * bw^(m-k); identity: sum q_k basis_k * den_P
    #                                      - sum r_k basis_k * num_P = 0
    q_cols = [p * P.den for p in basis]
    r_cols = [p * P.num for p in basis]
    deg = max(p.degree for p in q_cols + r_cols)
    width = 2 * (m + 1)
    rows = []
    for e in range(deg + 1):
        rows.append(
            [q_cols[k].coeff(e) for k in range(m + 1)]
            + [-r_cols[k].coeff(e) for k in range(m + 1)]
        )
    for v in _nullspace_vector(rows, width):
        num = UniPoly(v[: m + 1])
        den = UniPoly(v[m + 1:])
        if den.is_zero():
            continue
        Q = rf_make(num, den)
        if rf_compose(Q, W) == P:
            return Q
    raise NotAFactor("no left composition factor over Q(i)")
