"""Exact Gaussian-rational arithmetic and complex ball arithmetic.

Coefficients throughout the library live in Q(i) represented exactly by a
pair of `fractions.Fraction`.  The numeric layer is midpoint-radius ball
arithmetic: centers are mpfr values at a stated precision, radii are
rigorous upper bounds computed through exact rational arithmetic and
rounded outward, so a ball always contains the exact value it represents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import DivisionByZero

BigRational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, mpfr):
        q = mpq(x)
        return Fraction(int(q.numerator), int(q.denominator))
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction")


def sqrt_upper(x: Fraction) -> Fraction:
    """A rational upper bound for sqrt(x), x >= 0."""
    if x < 0:
        raise ValueError("negative argument")
    if x == 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    # scale to keep the bound reasonably tight
    s = 1 << 64
    n2 = n * s * s
    r = math.isqrt(n2 // d) + 1
    return Fraction(r, s)


def sqrt_lower(x: Fraction) -> Fraction:
    """A rational lower bound for sqrt(x), x >= 0."""
    if x <= 0:
        return Fraction(0)
    n, d = x.numerator, x.denominator
    s = 1 << 64
    d2 = d * s * s
    r = math.isqrt(d2 // n) + 1
    return Fraction(s, r)


@dataclass(frozen=True)
class GaussianRational:
    """An exact element a + b*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re, im=0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GR_ONE / (self ** (-k))
        result = GR_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|a|^2 = re^2 + im^2, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self):
        return (self.re, self.im)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return format_gaussian(self)

    def __repr__(self):
        return f"GR({format_gaussian(self)})"


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(Fraction(1))
GR_I = GaussianRational(Fraction(0), Fraction(1))


def format_gaussian(a: GaussianRational) -> str:
    """Render in the grammar form `a/b + c/d*i`; exact round trip."""

    def frac(x: Fraction) -> str:
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    if a.im == 0:
        return frac(a.re)
    if a.im == 1:
        im_part = "i"
    elif a.im == -1:
        im_part = "-i"
    else:
        im_part = f"{frac(a.im)}*i"
    if a.re == 0:
        return im_part
    sign = "+" if a.im > 0 else "-"
    mag = a.im if a.im > 0 else -a.im
    im_abs = "i" if mag == 1 else f"{frac(mag)}*i"
    return f"{frac(a.re)} {sign} {im_abs}"


def gr_arith(a: GaussianRational, b: GaussianRational, op: str) -> GaussianRational:
    """Field arithmetic in Q(i); op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def gr_conj(a: GaussianRational) -> GaussianRational:
    return a.conjugate()


def gr_norm(a: GaussianRational) -> Fraction:
    return a.norm()


# ---------------------------------------------------------------------------
# rational interval arithmetic (exact; used internally for rigor)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """A closed rational interval [lo, hi]; all operations are exact."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @staticmethod
    def point(x) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    @staticmethod
    def around(mid, rad) -> "Interval":
        mid, rad = Fraction(mid), Fraction(rad)
        return Interval(mid - rad, mid + rad)

    def __add__(self, other):
        other = _iv(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = _iv(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return _iv(other) - self

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        other = _iv(other)
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(cands), max(cands))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _iv(other)
        if other.contains(0):
            raise ZeroDivisionError("interval division by interval containing 0")
        return self * Interval(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other):
        return _iv(other) / self

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def strictly_contains(self, other: "Interval") -> bool:
        return self.lo < other.lo and other.hi < self.hi

    def intersects(self, other: "Interval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def rad(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def mag(self) -> Fraction:
        """sup |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> Fraction:
        """inf |x| over the interval."""
        if self.contains(0):
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def sign(self) -> int:
        """1 or -1 when the interval excludes 0, else 0."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0


def _iv(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(Fraction(x))


@dataclass(frozen=True)
class RectComplex:
    """A complex rectangle re + i*im with exact rational interval sides."""

    re: Interval
    im: Interval

    @staticmethod
    def point(a: GaussianRational) -> "RectComplex":
        return RectComplex(Interval.point(a.re), Interval.point(a.im))

    @staticmethod
    def box(cre, cim, rad) -> "RectComplex":
        return RectComplex(Interval.around(cre, rad), Interval.around(cim, rad))

    def __add__(self, other):
        other = _rc(other)
        return RectComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _rc(other)
        return RectComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _rc(other) - self

    def __neg__(self):
        return RectComplex(-self.re, -self.im)

    def __mul__(self, other):
        other = _rc(other)
        return RectComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rc(other)
        n = other.abs2()
        if n.contains(0):
            raise ZeroDivisionError("complex rectangle division by region containing 0")
        conj = RectComplex(other.re, -other.im)
        prod = self * conj
        return RectComplex(prod.re / n, prod.im / n)

    def abs2(self) -> Interval:
        r2 = self.re * self.re
        i2 = self.im * self.im
        # x^2 over an interval never dips below 0
        lo = max(Fraction(0), r2.lo) + max(Fraction(0), i2.lo)
        return Interval(lo, r2.hi + i2.hi)

    def contains_zero(self) -> bool:
        return self.re.contains(0) and self.im.contains(0)

    def contains_point(self, a: GaussianRational) -> bool:
        return self.re.contains(a.re) and self.im.contains(a.im)

    def strictly_contains(self, other: "RectComplex") -> bool:
        return self.re.strictly_contains(other.re) and self.im.strictly_contains(other.im)

    def mid(self) -> GaussianRational:
        return GaussianRational(self.re.mid(), self.im.mid())

    def rad(self) -> Fraction:
        return max(self.re.rad(), self.im.rad())


def _rc(x) -> RectComplex:
    if isinstance(x, RectComplex):
        return x
    if isinstance(x, GaussianRational):
        return RectComplex.point(x)
    if isinstance(x, (int, Fraction)):
        return RectComplex.point(GaussianRational(Fraction(x)))
    raise TypeError(f"cannot coerce {type(x).__name__} to RectComplex")


# ---------------------------------------------------------------------------
# complex balls
# ---------------------------------------------------------------------------


def _round_nearest(x: Fraction, prec: int) -> mpfr:
    with gmpy2.context(precision=prec, round=gmpy2.RoundToNearest):
        return mpfr(mpq(x))


def _round_up(x: Fraction, prec: int) -> mpfr:
    with gmpy2.context(precision=prec, round=gmpy2.RoundUp):
        return mpfr(mpq(x))


class ComplexBall:
    """A rigorous disk enclosure: center (re, im) at `prec` bits plus radius.

    The exact value a ball stands for always lies within `rad` of the
    center; every operation widens radii so this never breaks.
    """

    __slots__ = ("re", "im", "rad", "prec")

    def __init__(self, re: mpfr, im: mpfr, rad: mpfr, prec: int):
        self.re = re
        self.im = im
        self.rad = rad
        self.prec = prec

    @staticmethod
    def from_exact(cre, cim, rad, prec: int) -> "ComplexBall":
        """Build a ball from an exact rational disk, rounding outward."""
        cre, cim, rad = Fraction(cre), Fraction(cim), Fraction(rad)
        if rad < 0:
            raise ValueError("negative radius")
        re = _round_nearest(cre, prec)
        im = _round_nearest(cim, prec)
        slack = abs(_as_fraction(re) - cre) + abs(_as_fraction(im) - cim)
        return ComplexBall(re, im, _round_up(rad + slack, prec), prec)

    @staticmethod
    def from_gaussian(a: GaussianRational, prec: int) -> "ComplexBall":
        return ComplexBall.from_exact(a.re, a.im, Fraction(0), prec)

    # exact views -----------------------------------------------------------

    def center_re(self) -> Fraction:
        return _as_fraction(self.re)

    def center_im(self) -> Fraction:
        return _as_fraction(self.im)

    def radius(self) -> Fraction:
        return _as_fraction(self.rad)

    def center(self) -> GaussianRational:
        return GaussianRational(self.center_re(), self.center_im())

    def rect(self) -> RectComplex:
        """The enclosing axis-aligned rational rectangle."""
        r = self.radius()
        return RectComplex.box(self.center_re(), self.center_im(), r)

    def is_exact(self) -> bool:
        return self.rad == 0

    def conjugate(self) -> "ComplexBall":
        return ComplexBall.from_exact(
            self.center_re(), -self.center_im(), self.radius(), self.prec)

    # arithmetic ------------------------------------------------------------

    def _exact(self):
        return self.center_re(), self.center_im(), self.radius()

    def __add__(self, other):
        other = _ball(other, self.prec)
        prec = max(self.prec, other.prec)
        a, b, r = self._exact()
        c, d, s = other._exact()
        return ComplexBall.from_exact(a + c, b + d, r + s, prec)

    __radd__ = __add__

    def __sub__(self, other):
        other = _ball(other, self.prec)
        prec = max(self.prec, other.prec)
        a, b, r = self._exact()
        c, d, s = other._exact()
        return ComplexBall.from_exact(a - c, b - d, r + s, prec)

    def __rsub__(self, other):
        return _ball(other, self.prec) - self

    def __neg__(self):
        return ComplexBall.from_exact(
            -self.center_re(), -self.center_im(), self.radius(), self.prec)

    def __mul__(self, other):
        other = _ball(other, self.prec)
        prec = max(self.prec, other.prec)
        a, b, r = self._exact()
        c, d, s = other._exact()
        m1 = sqrt_upper(a * a + b * b)
        m2 = sqrt_upper(c * c + d * d)
        rad = m1 * s + m2 * r + r * s
        return ComplexBall.from_exact(a * c - b * d, a * d + b * c, rad, prec)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexBall":
        """Exact image of the disk under z -> 1/z (a disk again)."""
        a, b, r = self._exact()
        n = a * a + b * b
        denom = n - r * r
        if denom <= 0:
            raise ZeroDivisionError("ball contains zero")
        return ComplexBall.from_exact(a / denom, -b / denom, r / denom, self.prec)

    def __truediv__(self, other):
        other = _ball(other, self.prec)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _ball(other, self.prec) * self.inverse()

    # queries ---------------------------------------------------------------

    def contains_zero(self) -> bool:
        a, b, r = self._exact()
        return a * a + b * b <= r * r

    def contains_exact(self, v: GaussianRational) -> bool:
        a, b, r = self._exact()
        return (a - v.re) ** 2 + (b - v.im) ** 2 <= r * r

    def contains_ball(self, other: "ComplexBall") -> bool:
        a, b, r = self._exact()
        c, d, s = other._exact()
        if s > r:
            return False
        dist = sqrt_upper((a - c) ** 2 + (b - d) ** 2)
        return dist + s <= r

    def overlaps(self, other: "ComplexBall") -> bool:
        a, b, r = self._exact()
        c, d, s = other._exact()
        d2 = (a - c) ** 2 + (b - d) ** 2
        return d2 <= (r + s) ** 2

    def abs_interval(self) -> Interval:
        """Rational enclosure of |z| over the ball."""
        a, b, r = self._exact()
        m = a * a + b * b
        hi = sqrt_upper(m) + r
        lo = max(Fraction(0), sqrt_lower(m) - r)
        return Interval(lo, hi)

    def widened(self, extra) -> "ComplexBall":
        a, b, r = self._exact()
        return ComplexBall.from_exact(a, b, r + Fraction(extra), self.prec)

    def __repr__(self):
        return f"ComplexBall({self.re}, {self.im}; rad={self.rad}, prec={self.prec})"


def _ball(x, prec: int) -> ComplexBall:
    if isinstance(x, ComplexBall):
        return x
    if isinstance(x, GaussianRational):
        return ComplexBall.from_gaussian(x, prec)
    if isinstance(x, (int, Fraction)):
        return ComplexBall.from_exact(Fraction(x), Fraction(0), Fraction(0), prec)
    raise TypeError(f"cannot coerce {type(x).__name__} to ComplexBall")


def to_ball(a: GaussianRational, precision_bits: int) -> ComplexBall:
    """Enclose an exact Gaussian rational in a ball at the given precision."""
    if precision_bits < 2:
        raise ValueError("precision_bits must be >= 2")
    return ComplexBall.from_gaussian(a, precision_bits)
