import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from levelcurves import parse_bipoly, parse_expression
from levelcurves.errors import ParseError, WrongVariable
from levelcurves.polynomials import format_bipoly
from levelcurves.ratfun import format_ratfun
from levelcurves.sampling import random_ratfun

from conftest import gr, up


def test_basic_expressions(P):
    assert P("z").num == up(0, 1)
    Q = P("(z^2 + 1) / (2*z - 3)")
    assert Q.num.monic() == up(1, 0, 1)
    assert Q.den.monic() == up(Fraction(-3, 2), 1).monic()


def test_gaussian_coefficients(P):
    Q = P("(3/5 + 4/5*i) * z")
    assert Q.num.lead() == gr(Fraction(3, 5), Fraction(4, 5))


def test_unary_minus_and_precedence(P):
    assert P("-z + 1") == P("1 - z")
    assert P("2*z^2") == P("2*(z^2)")
    assert P("-z^2") == P("-(z^2)")
    assert P("2 + 3 * z") == P("3*z + 2")


def test_constant_folding(P):
    Q = P("(1 + i)*(1 - i)")
    assert Q.is_constant() and Q.constant_value() == gr(2)


def test_parse_error_reports_position(P):
    with pytest.raises(ParseError) as err:
        P("z + * 2")
    assert err.value.position == 4


def test_unbalanced_parenthesis(P):
    with pytest.raises(ParseError):
        P("(z + 1")


def test_wrong_variable(P):
    with pytest.raises((ParseError, WrongVariable)):
        P("t + 1")


def test_division_by_zero_constant(P):
    with pytest.raises(ParseError):
        P("1 / (z - z)")


def test_nonconstant_exponent_rejected(P):
    with pytest.raises(ParseError):
        P("z ^ z")


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=100, deadline=None)
def test_print_parse_round_trip(seed):
    rng = random.Random(seed)
    Q = random_ratfun(rng, 3, 3)
    assert parse_expression(format_ratfun(Q), "z") == Q


def test_bipoly_parse_and_round_trip():
    F = parse_bipoly("x*y - 1", ("x", "y"))
    assert F.deg(0) == 1 and F.deg(1) == 1
    again = parse_bipoly(format_bipoly(F), ("x", "y"))
    assert again == F


def test_bipoly_rejects_true_denominator():
    with pytest.raises(ParseError):
        parse_bipoly("1 / (x + y)", ("x", "y"))
