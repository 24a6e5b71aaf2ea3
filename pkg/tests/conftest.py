from fractions import Fraction

import pytest

from levelcurves import GaussianRational, UniPoly, parse_expression


def gr(re, im=0) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


def up(*coeffs) -> UniPoly:
    """UniPoly from low-to-high integer coefficients."""
    return UniPoly([gr(c) for c in coeffs])


@pytest.fixture
def P():
    return lambda text: parse_expression(text, "z")
