"""Dense exact polynomial arithmetic over Q(i).

Univariate and bivariate polynomials with Gaussian-rational coefficients:
content-removing PRS gcds, Sylvester resultants via fraction-free (Bareiss)
elimination, Yun squarefree decomposition, and certified complex root
isolation (Aberth-Ehrlich start, interval-Newton certification).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .arith import (
    GR_ONE,
    GR_ZERO,
    ComplexBall,
    GaussianRational,
    RectComplex,
    format_gaussian,
    sqrt_upper,
)
from .errors import BothZero, CertificationFailed, ZeroPolynomial

# ---------------------------------------------------------------------------
# Gaussian-integer gcd (content removal for the PRS)
# ---------------------------------------------------------------------------


def _gi_divround(a, b):
    """Nearest Gaussian integer to a/b for Gaussian integers a, b."""
    ar, ai = a
    br, bi = b
    n = br * br + bi * bi
    qr = Fraction(ar * br + ai * bi, n)
    qi = Fraction(ai * br - ar * bi, n)
    return (round(qr), round(qi))


def _gi_gcd(a, b):
    while b != (0, 0):
        q = _gi_divround(a, b)
        r = (a[0] - (q[0] * b[0] - q[1] * b[1]), a[1] - (q[0] * b[1] + q[1] * b[0]))
        a, b = b, r
    return a


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial over Q(i); index = power of the variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    # construction ----------------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((GR_ONE,))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((GR_ZERO, GR_ONE))

    @staticmethod
    def constant(c) -> "UniPoly":
        if isinstance(c, (int, Fraction)):
            c = GaussianRational(Fraction(c))
        return UniPoly((c,))

    @staticmethod
    def monomial(c, k: int) -> "UniPoly":
        if isinstance(c, (int, Fraction)):
            c = GaussianRational(Fraction(c))
        return UniPoly((GR_ZERO,) * k + (c,))

    # basic queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 is the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> GaussianRational:
        return self.coeffs[0] if self.coeffs else GR_ZERO

    def lead(self) -> GaussianRational:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else GR_ZERO

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # arithmetic --------------------------------------------------------------

    def __add__(self, other):
        other = _up(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _up(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) - other.coeff(k) for k in range(n))

    def __rsub__(self, other):
        return _up(other) - self

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return self.scale(other)
        other = _up(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, c: GaussianRational) -> "UniPoly":
        return UniPoly(a * c for a in self.coeffs)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly((GR_ZERO,) * k + self.coeffs)

    def __pow__(self, k: int):
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        q = [GR_ZERO] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        lc = other.lead()
        dn = other.degree
        while len(r) - 1 >= dn and r:
            while r and r[-1].is_zero():
                r.pop()
            if len(r) - 1 < dn or not r:
                break
            c = r[-1] / lc
            d = len(r) - 1 - dn
            q[d] = c
            for j, b in enumerate(other.coeffs):
                r[d + j] = r[d + j] - c * b
            r.pop()
        return UniPoly(q), UniPoly(r)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(GR_ONE / self.lead())

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.coeffs[k] * GaussianRational.of(k) for k in range(1, len(self.coeffs))
        )

    def conj(self) -> "UniPoly":
        return UniPoly(c.conjugate() for c in self.coeffs)

    def reverse_conj(self, n: Optional[int] = None) -> "UniPoly":
        """x^n * conj(p)(1/x); n defaults to deg p."""
        if self.is_zero():
            return self
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("n below degree")
        return UniPoly(self.coeff(n - k).conjugate() for k in range(n + 1))

    # evaluation ---------------------------------------------------------------

    def eval(self, z: GaussianRational) -> GaussianRational:
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_rect(self, z: RectComplex) -> RectComplex:
        acc = RectComplex.point(GR_ZERO)
        for c in reversed(self.coeffs):
            acc = acc * z + RectComplex.point(c)
        return acc

    def eval_ball(self, z: ComplexBall) -> ComplexBall:
        acc = ComplexBall.from_gaussian(GR_ZERO, z.prec)
        for c in reversed(self.coeffs):
            acc = acc * z + ComplexBall.from_gaussian(c, z.prec)
        return acc

    def eval_mpc(self, z):
        acc = mpmath.mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * z + _to_mpc(c)
        return acc

    # normalization --------------------------------------------------------------

    def primitive(self) -> "UniPoly":
        """Remove the Gaussian-integer content (after clearing denominators)."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.re.denominator // math.gcd(den, c.re.denominator)
            den = den * c.im.denominator // math.gcd(den, c.im.denominator)
        g = (0, 0)
        for c in self.coeffs:
            gi = (int(c.re * den), int(c.im * den))
            g = _gi_gcd(g, gi)
            if g[0] * g[0] + g[1] * g[1] == 1:
                break
        content = GaussianRational(Fraction(g[0], den), Fraction(g[1], den))
        return UniPoly(c / content for c in self.coeffs)

    def __repr__(self):
        return f"UniPoly({format_unipoly(self, 'z')})"


def _up(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, GaussianRational):
        return UniPoly.constant(x)
    if isinstance(x, (int, Fraction)):
        return UniPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to UniPoly")


def _to_mpc(c: GaussianRational):
    return mpmath.mpc(
        mpmath.mpf(c.re.numerator) / c.re.denominator,
        mpmath.mpf(c.im.numerator) / c.im.denominator,
    )


def format_unipoly(p: UniPoly, var: str) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c.is_zero():
            continue
        if k == 0:
            term = _coeff_text(c)
        else:
            base = var if k == 1 else f"{var}^{k}"
            if c == GR_ONE:
                term = base
            elif c == -GR_ONE:
                term = f"-{base}"
            else:
                term = f"{_coeff_text(c)}*{base}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def _coeff_text(c: GaussianRational) -> str:
    s = format_gaussian(c)
    if c.im != 0 and c.re != 0:
        return f"({s})"
    if c.im != 0 and c.re == 0 and c.im != 1 and c.im != -1:
        return f"({s})"
    return s


# gcd machinery ---------------------------------------------------------------


def _pseudo_rem(a: UniPoly, b: UniPoly) -> UniPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    d = a.degree - b.degree + 1
    scaled = a.scale(b.lead() ** d)
    return scaled.divmod(b)[1]


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic exact gcd via a content-removing polynomial remainder sequence."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        if b.is_constant():
            return UniPoly.one()
        r = _pseudo_rem(a, b)
        if not r.is_zero():
            r = r.primitive()
        a, b = b, r
    return a.monic()


def squarefree_decomposition(p: UniPoly):
    """Yun decomposition: [(factor, multiplicity)], factors monic & coprime."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of 0")
    if p.is_constant():
        return []
    f = p.monic()
    g = uni_gcd(f, f.derivative())
    out = []
    if g.is_constant():
        return [(f, 1)]
    c = f.exact_div(g)
    d = f.derivative().exact_div(g) - c.derivative()
    i = 1
    while not c.is_constant():
        a = uni_gcd(c, d) if not d.is_zero() else c.monic()
        if not a.is_constant():
            out.append((a.monic(), i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


def compose_uni(p: UniPoly, q: UniPoly) -> UniPoly:
    """Exact p(q(x))."""
    acc = UniPoly.zero()
    for c in reversed(p.coeffs):
        acc = acc * q + UniPoly.constant(c)
    return acc


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------


class BiPoly:
    """Dense-enough bivariate polynomial over Q(i); terms keyed by (i, j)."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms, variables=("z", "w")):
        self.terms = {k: v for k, v in dict(terms).items() if not v.is_zero()}
        self.vars = tuple(variables)

    # construction ----------------------------------------------------------

    @staticmethod
    def zero(variables=("z", "w")) -> "BiPoly":
        return BiPoly({}, variables)

    @staticmethod
    def constant(c, variables=("z", "w")) -> "BiPoly":
        if isinstance(c, (int, Fraction)):
            c = GaussianRational(Fraction(c))
        return BiPoly({(0, 0): c}, variables)

    @staticmethod
    def monomial(c, i: int, j: int, variables=("z", "w")) -> "BiPoly":
        if isinstance(c, (int, Fraction)):
            c = GaussianRational(Fraction(c))
        return BiPoly({(i, j): c}, variables)

    @staticmethod
    def from_uni(p: UniPoly, which: int, variables=("z", "w")) -> "BiPoly":
        """Embed a univariate polynomial as a polynomial in variable index `which`."""
        terms = {}
        for k, c in enumerate(p.coeffs):
            key = (k, 0) if which == 0 else (0, k)
            terms[key] = c
        return BiPoly(terms, variables)

    # queries -----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def constant_value(self) -> GaussianRational:
        return self.terms.get((0, 0), GR_ZERO)

    def deg(self, which: int) -> int:
        if not self.terms:
            return -1
        return max(k[which] for k in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coeff(self, i: int, j: int) -> GaussianRational:
        return self.terms.get((i, j), GR_ZERO)

    def lead_key_lex(self):
        """Largest monomial in lex order with the first variable dominant."""
        return max(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.terms == other.terms
            and self.vars == other.vars
        )

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.vars))

    def __bool__(self):
        return bool(self.terms)

    # arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, GR_ZERO) + v
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, GR_ZERO) - v
        return BiPoly(out, self.vars)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()}, self.vars)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return self.scale(other)
        other = self._coerce(other)
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, GR_ZERO) + a * b
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def scale(self, c: GaussianRational) -> "BiPoly":
        return BiPoly({k: v * c for k, v in self.terms.items()}, self.vars)

    def __pow__(self, k: int):
        result = BiPoly.constant(GR_ONE, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.vars != self.vars and other.terms and self.terms:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return BiPoly.constant(other, self.vars)
        raise TypeError(f"cannot coerce {type(other).__name__} to BiPoly")

    def derivative(self, which: int) -> "BiPoly":
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[which]
            if e == 0:
                continue
            k = (i - 1, j) if which == 0 else (i, j - 1)
            out[k] = out.get(k, GR_ZERO) + c * GaussianRational.of(e)
        return BiPoly(out, self.vars)

    def conj(self) -> "BiPoly":
        return BiPoly({k: v.conjugate() for k, v in self.terms.items()}, self.vars)

    def swap(self) -> "BiPoly":
        return BiPoly(
            {(j, i): v for (i, j), v in self.terms.items()},
            (self.vars[1], self.vars[0]),
        )

    def rename(self, variables) -> "BiPoly":
        return BiPoly(self.terms, tuple(variables))

    # evaluation ------------------------------------------------------------------

    def eval_gr(self, x: GaussianRational, y: GaussianRational) -> GaussianRational:
        acc = GR_ZERO
        for (i, j), c in self.terms.items():
            acc = acc + c * (x ** i) * (y ** j)
        return acc

    def eval_rect(self, x: RectComplex, y: RectComplex) -> RectComplex:
        # Horner in the first variable with inner Horner in the second
        cols = self.coeff_list(0)
        acc = RectComplex.point(GR_ZERO)
        for p in reversed(cols):
            acc = acc * x + p.eval_rect(y)
        return acc

    def eval_ball(self, x: ComplexBall, y: ComplexBall) -> ComplexBall:
        cols = self.coeff_list(0)
        acc = ComplexBall.from_gaussian(GR_ZERO, x.prec)
        for p in reversed(cols):
            acc = acc * x + p.eval_ball(y)
        return acc

    def subst_uni(self, px: UniPoly, py: UniPoly) -> UniPoly:
        """Exact univariate substitution F(px(t), py(t))."""
        acc = UniPoly.zero()
        for p in reversed(self.coeff_list(0)):
            inner = UniPoly.zero()
            for c in reversed(p.coeffs):
                inner = inner * py + UniPoly.constant(c)
            acc = acc * px + inner
        return acc

    # coefficient views --------------------------------------------------------------

    def coeff_list(self, main: int):
        """Coefficients as UniPolys in the other variable, index = power of `main`."""
        d = self.deg(main)
        if d < 0:
            return []
        other_deg = self.deg(1 - main)
        cols = []
        for k in range(d + 1):
            cs = [GR_ZERO] * (other_deg + 1)
            for (i, j), c in self.terms.items():
                if (i, j)[main] == k:
                    cs[(i, j)[1 - main]] = c
            cols.append(UniPoly(cs))
        return cols

    @staticmethod
    def from_coeff_list(cols, main: int, variables=("z", "w")) -> "BiPoly":
        terms = {}
        for k, p in enumerate(cols):
            for e, c in enumerate(p.coeffs):
                key = (k, e) if main == 0 else (e, k)
                if not c.is_zero():
                    terms[key] = c
        return BiPoly(terms, variables)

    def to_uni(self, which: int) -> UniPoly:
        """View as univariate in variable `which`; other variable must not occur."""
        if self.deg(1 - which) > 0:
            raise ValueError("polynomial genuinely bivariate")
        d = self.deg(which)
        cs = [GR_ZERO] * (d + 1)
        for (i, j), c in self.terms.items():
            cs[(i, j)[which]] = c
        return UniPoly(cs)

    # division / normalization ---------------------------------------------------------

    def exact_div(self, g: "BiPoly") -> "BiPoly":
        """Exact division; raises ValueError if g does not divide self."""
        if g.is_zero():
            raise ZeroPolynomial("division by zero polynomial")
        if self.is_zero():
            return BiPoly.zero(self.vars)
        lt_key = g.lead_key_lex()
        lt_c = g.terms[lt_key]
        rem = dict(self.terms)
        quo = {}
        while rem:
            key = max(rem)
            c = rem[key]
            qi, qj = key[0] - lt_key[0], key[1] - lt_key[1]
            if qi < 0 or qj < 0:
                raise ValueError("inexact bivariate division")
            qc = c / lt_c
            quo[(qi, qj)] = quo.get((qi, qj), GR_ZERO) + qc
            for (i, j), gc in g.terms.items():
                k = (i + qi, j + qj)
                nv = rem.get(k, GR_ZERO) - qc * gc
                if nv.is_zero():
                    rem.pop(k, None)
                else:
                    rem[k] = nv
        return BiPoly(quo, self.vars)

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    def normalized(self) -> "BiPoly":
        """Scale so the lex-leading coefficient is 1."""
        if self.is_zero():
            return self
        return self.scale(GR_ONE / self.terms[self.lead_key_lex()])

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)})"


def format_bipoly(p: BiPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (i, j) in sorted(p.terms, reverse=True):
        c = p.terms[(i, j)]
        factors = []
        for var, e in ((p.vars[0], i), (p.vars[1], j)):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        if not factors:
            term = _coeff_text(c)
        elif c == GR_ONE:
            term = "*".join(factors)
        elif c == -GR_ONE:
            term = "-" + "*".join(factors)
        else:
            term = _coeff_text(c) + "*" + "*".join(factors)
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


# bivariate gcd ---------------------------------------------------------------


def _bi_content(p: BiPoly, main: int) -> UniPoly:
    cols = [c for c in p.coeff_list(main) if not c.is_zero()]
    g = cols[0]
    for c in cols[1:]:
        g = uni_gcd(g, c)
        if g.is_constant():
            break
    return g.monic()


def _bi_primitive(p: BiPoly, main: int):
    cont = _bi_content(p, main)
    if cont.is_constant():
        return p, UniPoly.one()
    cols = [c.exact_div(cont) for c in p.coeff_list(main)]
    return BiPoly.from_coeff_list(cols, main, p.vars), cont


def _bi_pseudo_rem(a, b):
    """Pseudo-remainder of coefficient lists (UniPoly coefficients) in the main var."""
    lc = b[-1]
    r = list(a)
    while len(r) - 1 >= len(b) - 1 and r:
        while r and r[-1].is_zero():
            r.pop()
        if not r or len(r) - 1 < len(b) - 1:
            break
        s = r[-1]
        d = (len(r) - 1) - (len(b) - 1)
        r = [c * lc for c in r]
        for j, bc in enumerate(b):
            r[d + j] = r[d + j] - s * bc
        r.pop()
    while r and r[-1].is_zero():
        r.pop()
    return r


def bi_gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    """Exact primitive gcd, normalized to lex-leading coefficient 1."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials")
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    variables = p.vars
    main = 1  # eliminate along the second variable
    pp, cp = _bi_primitive(p, main)
    qq, cq = _bi_primitive(q, main)
    cont = uni_gcd(cp, cq)

    a = pp.coeff_list(main)
    b = qq.coeff_list(main)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            # primitive and degree 0 in the main variable: unit
            a = [UniPoly.one()]
            break
        r = _bi_pseudo_rem(a, b)
        if r:
            bp = BiPoly.from_coeff_list(r, main, variables)
            bp, _ = _bi_primitive(bp, main)
            r = bp.coeff_list(main)
        a, b = b, r
    g = BiPoly.from_coeff_list(a, main, variables)
    g, _ = _bi_primitive(g, main)
    result = g * BiPoly.from_uni(cont, 0, variables)
    return result.normalized()


# resultants ------------------------------------------------------------------


def _bareiss_det(m):
    """Fraction-free determinant; entries need *, -, is_zero, exact_div."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    m = [row[:] for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next(
                (r for r in range(k + 1, n) if not m[r][k].is_zero()), None
            )
            if pivot_row is None:
                return None  # column annihilated: determinant is zero
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else num.exact_div(prev)
            m[i][k] = m[i][k] - m[i][k]  # zero of the right type
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_det(p_coeffs, q_coeffs, zero, one):
    """Resultant from high-first coefficient lists; p-rows first."""
    m = len(p_coeffs) - 1
    n = len(q_coeffs) - 1
    size = m + n
    if size == 0:
        return one
    rows = []
    for s in range(n):
        rows.append([zero] * s + list(p_coeffs) + [zero] * (size - s - m - 1))
    for s in range(m):
        rows.append([zero] * s + list(q_coeffs) + [zero] * (size - s - n - 1))
    det = _bareiss_det(rows)
    return zero if det is None else det


def bi_resultant(p: BiPoly, q: BiPoly, eliminate: str) -> UniPoly:
    """Sylvester resultant eliminating the named variable; result univariate."""
    if eliminate not in p.vars:
        raise ValueError(f"unknown variable {eliminate!r}")
    main = p.vars.index(eliminate)
    if p.deg(main) <= 0 or q.deg(main) <= 0:
        from .errors import DegreeZero

        raise DegreeZero("resultant input constant in the eliminated variable")
    pc = list(reversed(p.coeff_list(main)))
    qc = list(reversed(q.coeff_list(main)))
    det = sylvester_det(pc, qc, UniPoly.zero(), UniPoly.one())
    return det


def conj_poly(p):
    """Coefficient-wise conjugation for UniPoly or BiPoly."""
    return p.conj()


# ---------------------------------------------------------------------------
# certified root isolation
# ---------------------------------------------------------------------------


@dataclass
class RootBall:
    location: ComplexBall
    multiplicity: int
    certified: bool
    exact: Optional[GaussianRational] = None

    def sort_key(self):
        return (self.location.center_re(), self.location.center_im(), self.location.radius())


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """Rational upper bound for |root| of p."""
    lead_norm = p.lead().norm()
    best = Fraction(0)
    for c in p.coeffs[:-1]:
        ratio = sqrt_upper(c.norm() / lead_norm)
        if ratio > best:
            best = ratio
    return 1 + best


def _aberth_roots(p: UniPoly, prec: int):
    """Non-rigorous simultaneous iteration; returns approximate mpc roots."""
    n = p.degree
    dp = p.derivative()
    bound = float(cauchy_root_bound(p))
    with mpmath.workprec(prec + 32):
        zs = [
            mpmath.mpc(bound, 0) * mpmath.exp(2j * mpmath.pi * (k + 0.3527) / n)
            * (1 + mpmath.mpf(k) / (97 * n))
            for k in range(n)
        ]
        tol = mpmath.mpf(2) ** (-(prec + 8))
        for _ in range(400):
            moved = mpmath.mpf(0)
            for i in range(n):
                pv = p.eval_mpc(zs[i])
                dv = dp.eval_mpc(zs[i])
                if dv == 0:
                    zs[i] += mpmath.mpf(1) / (1 << 20)
                    continue
                w = pv / dv
                s = mpmath.mpc(0)
                for j in range(n):
                    if j != i:
                        diff = zs[i] - zs[j]
                        if diff == 0:
                            diff = tol
                        s += 1 / diff
                denom = 1 - w * s
                corr = w if denom == 0 else w / denom
                zs[i] -= corr
                moved = max(moved, abs(corr))
            if moved < tol:
                break
        # Newton polish: quadratic convergence once Aberth is close
        for i in range(n):
            for _ in range(60):
                dv = dp.eval_mpc(zs[i])
                if dv == 0:
                    break
                step = p.eval_mpc(zs[i]) / dv
                zs[i] -= step
                if abs(step) < tol:
                    break
        return [mpmath.mpc(z) for z in zs]


def _mpf_to_fraction(x) -> Fraction:
    """Exact rational value of an mpmath mpf."""
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    man, exp = int(man), int(exp)
    if man == 0:
        return Fraction(0)
    v = Fraction(man) * (Fraction(2) ** exp)
    return -v if sign else v


def _snap_gaussian(cre: Fraction, cim: Fraction, rad: Fraction) -> GaussianRational:
    """Cheap rational candidate near the center (for exact-root detection)."""
    if rad <= 0:
        return GaussianRational(cre, cim)
    # denominators bounded by the certified radius
    limit = max(4, int(1 / rad) + 1) if rad < 1 else 4
    limit = min(limit, 10 ** 12)
    return GaussianRational(
        Fraction(cre).limit_denominator(limit), Fraction(cim).limit_denominator(limit)
    )


def _certify_simple_root(f: UniPoly, df: UniPoly, cre: Fraction, cim: Fraction,
                         rad: Fraction, target: Fraction):
    """Complex interval Newton; returns (box: RectComplex, exact or None) or None."""
    box = RectComplex.box(cre, cim, rad)
    certified = False
    work_bits = max(192, (target.denominator // max(target.numerator, 1)).bit_length() + 64)
    for _ in range(80):
        box = _round_box(box, work_bits)
        c = box.mid()
        fc = f.eval(c)
        if fc.is_zero():
            return RectComplex.point(c), c
        try:
            dfb = df.eval_rect(box)
            step = RectComplex.point(fc) / dfb
        except ZeroDivisionError:
            return None
        newton = RectComplex.point(c) - step
        if box.strictly_contains(newton):
            certified = True
            box = RectComplex(
                newton.re.intersect(box.re), newton.im.intersect(box.im)
            )
            if box.rad() <= target:
                return box, None
        elif certified:
            # keep contracting within the certified region
            try:
                box = RectComplex(
                    newton.re.intersect(box.re), newton.im.intersect(box.im)
                )
            except ValueError:
                return None
            if box.rad() <= target:
                return box, None
        else:
            return None
    return (box, None) if certified else None


def _round_box(box: RectComplex, bits: int = 192) -> RectComplex:
    """Re-round box endpoints to limit rational blowup (outward, rigorous)."""

    def rd(fr: Fraction, up: bool) -> Fraction:
        if fr == 0:
            return fr
        sc = Fraction(1 << bits)
        n = fr * sc
        v = math.ceil(n) if up else math.floor(n)
        return Fraction(v) / sc

    return RectComplex(
        type(box.re)(rd(box.re.lo, False), rd(box.re.hi, True)),
        type(box.im)(rd(box.im.lo, False), rd(box.im.hi, True)),
    )


def certified_roots(p: UniPoly, precision_bits: int = 128, max_precision_bits: int = 4096,
                    target_radius: Optional[Fraction] = None):
    """All complex roots of p as certified balls with multiplicities.

    The squarefree part is isolated by Aberth iteration and certified by
    complex interval Newton; multiplicities come from the Yun decomposition.
    Precision escalates 128 -> 256 -> ... up to the cap, then
    CertificationFailed is raised.
    """
    if p.is_zero():
        raise ZeroPolynomial("root isolation of the zero polynomial")
    if p.degree < 1:
        raise ZeroPolynomial("root isolation needs degree >= 1")
    factors = squarefree_decomposition(p)
    prec = precision_bits
    while True:
        try:
            balls = _roots_at_precision(factors, prec, target_radius)
            return sorted(balls, key=RootBall.sort_key)
        except _RetryPrecision:
            if prec >= max_precision_bits:
                raise CertificationFailed(
                    f"root certification failed at precision cap {max_precision_bits}",
                    precision_cap=max_precision_bits,
                )
            prec = min(prec * 2, max_precision_bits)


class _RetryPrecision(Exception):
    pass


def _roots_at_precision(factors, prec: int, target_radius):
    target = Fraction(1, 1 << (prec - 16)) if target_radius is None else Fraction(target_radius)
    out = []
    boxes = []
    for f, mult in factors:
        df = f.derivative()
        approx = _aberth_roots(f, prec)
        frs = [(_mpf_to_fraction(z.real), _mpf_to_fraction(z.imag)) for z in approx]
        # initial radii from nearest-neighbor separation
        for idx, (cre, cim) in enumerate(frs):
            sep = None
            for jdx, (ore, oim) in enumerate(frs):
                if jdx == idx:
                    continue
                d2 = (cre - ore) ** 2 + (cim - oim) ** 2
                if sep is None or d2 < sep:
                    sep = d2
            base = sqrt_upper(sep) / 4 if sep else Fraction(1)
            if base <= 0:
                base = Fraction(1, 1 << (prec // 2))
            floor_r = Fraction(1, 1 << (prec - 24)) if prec > 32 else Fraction(1, 256)
            rad = max(base, floor_r)
            result = None
            # exact rational root detection first
            snap = _snap_gaussian(cre, cim, min(rad, Fraction(1, 1 << 24)))
            if f.eval(snap).is_zero():
                result = (RectComplex.point(snap), snap)
            else:
                trial = min(rad, Fraction(1, 1024))
                for _ in range(7):
                    result = _certify_simple_root(f, df, cre, cim, trial, target)
                    if result is not None:
                        break
                    trial = trial / 8
            if result is None:
                raise _RetryPrecision()
            box, exact = result
            box = _round_box(box, max(prec * 2, 192))
            boxes.append((box, mult, exact, f))
    # pairwise disjointness: contract any overlapping pair further
    for _ in range(40):
        collision = _find_overlap(boxes)
        if collision is None:
            break
        i, j = collision
        boxes[i] = _shrink(boxes[i], target)
        boxes[j] = _shrink(boxes[j], target)
    else:
        raise _RetryPrecision()
    if _find_overlap(boxes) is not None:
        raise _RetryPrecision()
    for box, mult, exact, _f in boxes:
        ball = ComplexBall.from_exact(box.mid().re, box.mid().im, box.rad() * 2, prec)
        out.append(RootBall(location=ball, multiplicity=mult, certified=True, exact=exact))
    return out


def _find_overlap(boxes):
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            bi, bj = boxes[i][0], boxes[j][0]
            if bi.re.intersects(bj.re) and bi.im.intersects(bj.im):
                return (i, j)
    return None


def _shrink(entry, target):
    box, mult, exact, f = entry
    if exact is not None or box.rad() == 0:
        return entry
    df = f.derivative()
    result = _certify_simple_root(
        f, df, box.mid().re, box.mid().im, box.rad(), target / 16
    )
    if result is None:
        raise _RetryPrecision()
    nbox, nexact = result
    return (_round_box(nbox), mult, nexact if nexact is not None else exact, f)
