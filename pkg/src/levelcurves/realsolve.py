"""Real-point machinery shared by the solver and the curve analyzer.

Realification of conjugate-variable polynomials, deterministic grid search
for certified simple real points of a plane curve, and rigorous interval
Newton in one and two real variables (exact rational interval arithmetic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import List, Optional, Tuple

from .arith import GaussianRational, Interval, RectComplex, sqrt_upper
from .polynomials import BiPoly, UniPoly

# ---------------------------------------------------------------------------
# realification
# ---------------------------------------------------------------------------


def realify_parts(G: BiPoly) -> Tuple[BiPoly, BiPoly]:
    """Split G(x+iy, x-iy) into real and imaginary parts over (x, y)."""
    x_plus = BiPoly(
        {(1, 0): GaussianRational.of(1), (0, 1): GaussianRational.of(0, 1)}, ("x", "y")
    )
    x_minus = BiPoly(
        {(1, 0): GaussianRational.of(1), (0, 1): GaussianRational.of(0, -1)}, ("x", "y")
    )
    dz, dw = max(G.deg(0), 0), max(G.deg(1), 0)
    pow_p = [BiPoly.constant(1, ("x", "y"))]
    for _ in range(dz):
        pow_p.append(pow_p[-1] * x_plus)
    pow_m = [BiPoly.constant(1, ("x", "y"))]
    for _ in range(dw):
        pow_m.append(pow_m[-1] * x_minus)
    acc = BiPoly.zero(("x", "y"))
    for (i, j), c in G.terms.items():
        acc = acc + (pow_p[i] * pow_m[j]).scale(c)
    re_terms = {}
    im_terms = {}
    for k, v in acc.terms.items():
        if v.re != 0:
            re_terms[k] = GaussianRational(v.re)
        if v.im != 0:
            im_terms[k] = GaussianRational(v.im)
    return BiPoly(re_terms, ("x", "y")), BiPoly(im_terms, ("x", "y"))


def real_trace_poly(G: BiPoly) -> BiPoly:
    """A real polynomial in (x, y) whose zero set is {z : G(z, conj z) = 0}.

    Valid when G is conjugate-swap invariant up to a unimodular constant,
    which holds for level polynomials and their gcds.
    """
    re, im = realify_parts(G)
    if im.is_zero():
        return re
    if re.is_zero():
        return im
    # parts must be rationally proportional; return either
    key = re.lead_key_lex()
    ratio = im.coeff(*key) / re.coeff(*key) if not re.coeff(*key).is_zero() else None
    if ratio is not None and im == re.scale(ratio):
        return re
    key = im.lead_key_lex()
    ratio = re.coeff(*key) / im.coeff(*key)
    if re == im.scale(ratio):
        return im
    raise AssertionError("realification produced non-proportional parts")


def rational_content(p: BiPoly) -> Fraction:
    """Positive rational content over all real/imaginary coefficient parts."""
    nums: List[int] = []
    dens: List[int] = []
    for c in p.terms.values():
        for fr in (c.re, c.im):
            if fr != 0:
                nums.append(abs(fr.numerator))
                dens.append(fr.denominator)
    if not nums:
        return Fraction(1)
    n = 0
    for v in nums:
        n = _int_gcd(n, v)
    d = 1
    for v in dens:
        d = d * v // _int_gcd(d, v)
    return Fraction(n, d)


# ---------------------------------------------------------------------------
# interval evaluation helpers
# ---------------------------------------------------------------------------


def _rect(iv: Interval) -> RectComplex:
    return RectComplex(iv, Interval.point(0))


def eval_real_box(p: BiPoly, xv: Interval, yv: Interval) -> Interval:
    """Enclosure of a real-coefficient BiPoly over a real box."""
    return p.eval_rect(_rect(xv), _rect(yv)).re


def eval_real_point(p: BiPoly, x: Fraction, y: Fraction) -> Fraction:
    return p.eval_gr(GaussianRational(x), GaussianRational(y)).re


def restrict(p: BiPoly, which: int, value: Fraction) -> UniPoly:
    """Substitute a rational value for one variable; univariate in the other."""
    g = GaussianRational(value)
    cols = p.coeff_list(which)
    acc = UniPoly.zero()
    for c in reversed(cols):
        acc = acc.scale(g) + c
    return acc


def eval_uni_interval(p: UniPoly, iv: Interval) -> Interval:
    return p.eval_rect(_rect(iv)).re


# ---------------------------------------------------------------------------
# 1D interval Newton (with a sign-change bracket)
# ---------------------------------------------------------------------------


def _round_down(x: Fraction, bits: int) -> Fraction:
    scaled = x * (1 << bits)
    return Fraction(scaled.numerator // scaled.denominator, 1 << bits)


def _round_interval_out(iv: Interval, bits: int) -> Interval:
    """Outward rounding to a dyadic grid; keeps endpoint bit-size bounded."""
    return Interval(_round_down(iv.lo, bits), -_round_down(-iv.hi, bits))


def refine_bracket(f: UniPoly, lo: Fraction, hi: Fraction, target: Fraction,
                   max_iter: int = 120) -> Optional[Tuple[Interval, bool]]:
    """Certified simple zero of a real univariate inside a sign-change bracket.

    Returns (enclosure, derivative_nonzero) or None if certification fails.
    """
    work_bits = max(64, (target.denominator // max(target.numerator, 1)).bit_length() + 32)
    flo = f.eval(GaussianRational(lo)).re
    fhi = f.eval(GaussianRational(hi)).re
    if flo == 0:
        return Interval.point(lo), _deriv_nonzero(f, Interval.point(lo))
    if fhi == 0:
        return Interval.point(hi), _deriv_nonzero(f, Interval.point(hi))
    if (flo > 0) == (fhi > 0):
        return None
    df = f.derivative()
    box = Interval(lo, hi)
    for _ in range(max_iter):
        if box.hi - box.lo <= 2 * target:
            break
        m = box.mid()
        fm = f.eval(GaussianRational(m)).re
        if fm == 0:
            box = Interval.point(m)
            break
        dfv = eval_uni_interval(df, box)
        if dfv.contains(0):
            # bisect, retaining the sign change
            if (fm > 0) == (flo > 0):
                box = Interval(m, box.hi)
                flo = fm
            else:
                box = Interval(box.lo, m)
                fhi = fm
            continue
        step = Interval.point(fm) / dfv
        newton = Interval.point(m) - step
        if not newton.intersects(box):
            return None
        newbox = newton.intersect(box)
        # keep the bracket endpoints' signs consistent
        flo = f.eval(GaussianRational(newbox.lo)).re
        fhi = f.eval(GaussianRational(newbox.hi)).re
        if flo == 0:
            box = Interval.point(newbox.lo)
            break
        if fhi == 0:
            box = Interval.point(newbox.hi)
            break
        if (flo > 0) == (fhi > 0):
            # zero moved outside rounding; fall back to bisection state
            return None
        rounded = _round_interval_out(newbox, work_bits)
        rlo = f.eval(GaussianRational(rounded.lo)).re
        rhi = f.eval(GaussianRational(rounded.hi)).re
        if rlo != 0 and rhi != 0 and (rlo > 0) != (rhi > 0):
            box, flo, fhi = rounded, rlo, rhi
        else:
            box = newbox
    simple = _deriv_nonzero(f, box)
    return box, simple


def _deriv_nonzero(f: UniPoly, box: Interval) -> bool:
    dfv = eval_uni_interval(f.derivative(), box)
    return not dfv.contains(0)


# ---------------------------------------------------------------------------
# certified simple real points of a plane curve, found on a grid
# ---------------------------------------------------------------------------


@dataclass
class RealCurvePoint:
    x: Interval
    y: Interval
    fixed_axis: int          # 0: x is exact rational, 1: y is exact rational
    fixed_value: Fraction
    restriction: UniPoly     # univariate restriction holding the free coordinate

    def approx(self) -> Tuple[Fraction, Fraction]:
        return self.x.mid(), self.y.mid()


def curve_search_radius(G: BiPoly) -> Fraction:
    """Deterministic search radius: 1 + a crude coefficient-based root bound."""
    if G.is_zero() or G.is_constant():
        return Fraction(2)
    lead = G.terms[G.lead_key_lex()]
    lead_n = lead.norm()
    best = Fraction(1)
    for c in G.terms.values():
        r = sqrt_upper(c.norm() / lead_n)
        if r > best:
            best = r
    return 1 + best


def find_simple_real_points(h: BiPoly, radius: Fraction, grid: int = 64,
                            want: int = 1, target: Fraction = Fraction(1, 10 ** 20),
                            ) -> List[RealCurvePoint]:
    """Scan a (grid x grid) lattice over [-radius, radius]^2 for sign changes
    of h along lattice edges and certify simple curve points there.

    Points are certified: the free coordinate is an interval Newton enclosure
    of a simple zero of the univariate restriction, and the curve gradient is
    verified nonzero over the resulting box.
    """
    found: List[RealCurvePoint] = []
    step = 2 * radius / grid
    xs = [-radius + k * step for k in range(grid + 1)]
    hx = h.derivative(0)
    hy = h.derivative(1)

    def try_edge(fixed_axis: int, fixed_value: Fraction, lo: Fraction, hi: Fraction):
        f = restrict(h, fixed_axis, fixed_value)
        if f.degree < 1:
            return None
        res = refine_bracket(f, lo, hi, target)
        if res is None:
            return None
        iv, simple = res
        if not simple:
            return None
        if fixed_axis == 0:
            box_x, box_y = Interval.point(fixed_value), iv
        else:
            box_x, box_y = iv, Interval.point(fixed_value)
        gx = eval_real_box(hx, box_x, box_y)
        gy = eval_real_box(hy, box_x, box_y)
        if gx.contains(0) and gy.contains(0):
            return None
        return RealCurvePoint(box_x, box_y, fixed_axis, fixed_value, f)

    # column scan: vertical edges (x fixed), then row scan
    for fixed_axis in (0, 1):
        for v in xs:
            f = restrict(h, fixed_axis, v)
            if f.degree < 1:
                continue
            vals = [f.eval(GaussianRational(t)).re for t in xs]
            for k in range(grid):
                a, b = vals[k], vals[k + 1]
                if (a > 0 and b < 0) or (a < 0 and b > 0) or a == 0:
                    hi = xs[k + 1] if a != 0 else xs[k] + step / 2
                    pt = try_edge(fixed_axis, v, xs[k], hi)
                    if pt is not None and _is_new_point(found, pt):
                        found.append(pt)
                        if len(found) >= want:
                            return found
    return found


def _is_new_point(points: List[RealCurvePoint], pt: RealCurvePoint,
                  min_sep: Fraction = Fraction(1, 1000)) -> bool:
    px, py = pt.approx()
    for other in points:
        ox, oy = other.approx()
        if abs(px - ox) < min_sep and abs(py - oy) < min_sep:
            return False
    return True


def refine_point(pt: RealCurvePoint, target: Fraction) -> RealCurvePoint:
    """Shrink the free coordinate of a certified point to the target width."""
    iv = pt.y if pt.fixed_axis == 0 else pt.x
    res = refine_bracket(pt.restriction, iv.lo, iv.hi, target)
    if res is None:
        return pt
    niv, _ = res
    if pt.fixed_axis == 0:
        return RealCurvePoint(pt.x, niv, pt.fixed_axis, pt.fixed_value, pt.restriction)
    return RealCurvePoint(niv, pt.y, pt.fixed_axis, pt.fixed_value, pt.restriction)


# ---------------------------------------------------------------------------
# 2D interval Newton
# ---------------------------------------------------------------------------

PROVED_ZERO = "proved_zero"
NO_ZERO = "no_zero"
UNKNOWN = "unknown"


def newton_2d(h1: BiPoly, h2: BiPoly, box_x: Interval, box_y: Interval,
              target: Fraction, max_iter: int = 80):
    """Interval Newton for the real system h1 = h2 = 0 on a box.

    Returns (status, box_x, box_y); PROVED_ZERO means the final box contains
    exactly one solution, NO_ZERO means the box provably has none.
    """
    work_bits = max(64, (target.denominator // max(target.numerator, 1)).bit_length() + 32)
    d11, d12 = h1.derivative(0), h1.derivative(1)
    d21, d22 = h2.derivative(0), h2.derivative(1)
    proved = False
    for _ in range(max_iter):
        box_x = _round_interval_out(box_x, work_bits)
        box_y = _round_interval_out(box_y, work_bits)
        v1 = eval_real_box(h1, box_x, box_y)
        v2 = eval_real_box(h2, box_x, box_y)
        if not v1.contains(0) or not v2.contains(0):
            return (NO_ZERO, box_x, box_y) if not proved else (PROVED_ZERO, box_x, box_y)
        if proved and max(box_x.rad(), box_y.rad()) <= target:
            return PROVED_ZERO, box_x, box_y
        mx, my = box_x.mid(), box_y.mid()
        f1 = eval_real_point(h1, mx, my)
        f2 = eval_real_point(h2, mx, my)
        a = eval_real_box(d11, box_x, box_y)
        b = eval_real_box(d12, box_x, box_y)
        c = eval_real_box(d21, box_x, box_y)
        d = eval_real_box(d22, box_x, box_y)
        det = a * d - b * c
        if det.contains(0):
            return UNKNOWN, box_x, box_y
        s1 = (Interval.point(-f1) * d + Interval.point(f2) * b) / det
        s2 = (Interval.point(f1) * c + Interval.point(-f2) * a) / det
        nx = Interval.point(mx) + s1
        ny = Interval.point(my) + s2
        if not (nx.intersects(box_x) and ny.intersects(box_y)):
            return NO_ZERO, box_x, box_y
        inside = box_x.strictly_contains(nx) and box_y.strictly_contains(ny)
        box_x = nx.intersect(box_x)
        box_y = ny.intersect(box_y)
        if inside:
            proved = True
            if max(box_x.rad(), box_y.rad()) <= target:
                return PROVED_ZERO, box_x, box_y
    return (PROVED_ZERO if proved else UNKNOWN), box_x, box_y
