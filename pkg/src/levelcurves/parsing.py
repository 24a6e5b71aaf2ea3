"""Expression parsing for the command line.

Grammar (whitespace insensitive):

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := base ('^' nat)?
    base     := '-' base | rational | 'i' | variable | '(' expr ')'
    rational := int ('/' posint)?

Lowering is exact: constants become Gaussian rationals, division builds
reduced rational functions, and printing round-trips through the parser.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .arith import GaussianRational, GR_I, GR_ONE
from .errors import ParseError, WrongVariable, ZeroDenominator
from .polynomials import BiPoly, UniPoly
from .ratfun import RatFun, rf_constant, rf_from_poly, rf_make


@dataclass
class _Token:
    kind: str  # "int" | "name" | "op"
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            out.append(_Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return out


class _Parser:
    """Recursive-descent parser; values are (num, den) pairs in any algebra
    the supplied hooks provide (univariate RatFun or bivariate BiPoly)."""

    def __init__(self, tokens: List[_Token], length: int, variables, make_var,
                 make_const):
        self.toks = tokens
        self.length = length
        self.k = 0
        self.variables = tuple(variables)
        self.make_var = make_var
        self.make_const = make_const

    def peek(self) -> Optional[_Token]:
        return self.toks[self.k] if self.k < len(self.toks) else None

    def take(self) -> _Token:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", self.length)
        self.k += 1
        return t

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t is not None:
            raise ParseError(f"unexpected trailing {t.text!r}", t.pos)
        return v

    def expr(self):
        v = self.term()
        while True:
            t = self.peek()
            if t is not None and t.kind == "op" and t.text in "+-":
                self.take()
                rhs = self.term()
                v = v + rhs if t.text == "+" else v - rhs
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            t = self.peek()
            if t is not None and t.kind == "op" and t.text in "*/":
                self.take()
                rhs = self.factor()
                if t.text == "*":
                    v = v * rhs
                else:
                    try:
                        v = v / rhs
                    except (ZeroDivisionError, ZeroDenominator):
                        raise ParseError("division by zero", t.pos) from None
            else:
                return v

    def factor(self):
        # unary minus binds looser than ^, so -z^2 means -(z^2)
        t = self.peek()
        if t is not None and t.kind == "op" and t.text == "-":
            self.take()
            return -self.factor()
        v = self.base()
        t = self.peek()
        if t is not None and t.kind == "op" and t.text == "^":
            self.take()
            e = self.take()
            if e.kind != "int":
                raise ParseError("exponent must be a non-negative integer", e.pos)
            v = v ** int(e.text)
        return v

    def base(self):
        t = self.take()
        if t.kind == "int":
            return self.make_const(GaussianRational(Fraction(int(t.text))))
        if t.kind == "name":
            if t.text == "i":
                return self.make_const(GR_I)
            if t.text in self.variables:
                return self.make_var(t.text)
            raise WrongVariable(
                f"unexpected name {t.text!r} (allowed: "
                f"{', '.join(self.variables)})"
            )
        if t.kind == "op" and t.text == "(":
            v = self.expr()
            closing = self.take()
            if not (closing.kind == "op" and closing.text == ")"):
                raise ParseError("expected ')'", closing.pos)
            return v
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def parse_expression(text: str, variable: str = "z") -> RatFun:
    """Parse a univariate expression into an exact reduced rational function."""
    toks = _tokenize(text)
    parser = _Parser(
        toks, len(text), (variable,),
        make_var=lambda _: rf_from_poly(UniPoly.x()),
        make_const=rf_constant,
    )
    return parser.parse()


class _BiRat:
    """Bivariate fraction used for parsing curve equations; the final
    denominator must be constant."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly):
        self.num = num
        self.den = den

    def __add__(self, o):
        return _BiRat(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _BiRat(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self):
        return _BiRat(self.num.scale(-GR_ONE), self.den)

    def __mul__(self, o):
        return _BiRat(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if o.num.is_zero():
            raise ZeroDivisionError
        return _BiRat(self.num * o.den, self.den * o.num)

    def __pow__(self, k: int):
        return _BiRat(self.num ** k, self.den ** k)


def parse_bipoly(text: str, variables: Tuple[str, str] = ("x", "y")) -> BiPoly:
    """Parse a bivariate polynomial; division is allowed only by constants."""
    toks = _tokenize(text)

    def var(name: str) -> _BiRat:
        which = variables.index(name)
        return _BiRat(
            BiPoly.monomial(GR_ONE, 1 - which, which, variables),
            BiPoly.constant(GR_ONE, variables),
        )

    def const(c: GaussianRational) -> _BiRat:
        return _BiRat(
            BiPoly.constant(c, variables), BiPoly.constant(GR_ONE, variables)
        )

    parser = _Parser(toks, len(text), variables, make_var=var, make_const=const)
    v = parser.parse()
    if not v.den.is_constant():
        raise ParseError("polynomial input cannot divide by a variable", 0)
    return v.num.scale(GR_ONE / v.den.constant_value())
