import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from levelcurves import (
    ar_accumulate,
    gcd_power_shift,
    mult_independence,
    multiplicity_profile,
    uni_gcd,
)
from levelcurves.arlab import DEPENDENT, INDEPENDENT
from levelcurves.errors import DependentInputs
from levelcurves.polynomials import UniPoly
from levelcurves.sampling import random_unipoly

from conftest import gr, up


def test_gcd_power_shift_matches_direct_computation():
    P1, P2 = up(0, 1), up(1, 1)  # z and z + 1
    for k in (1, 2, 3, 6):
        direct = uni_gcd(P1 ** k - UniPoly.one(), P2 ** k - UniPoly.one())
        assert gcd_power_shift(P1, P2, k) == direct


def test_multiplicity_profile():
    p = up(0, 1) ** 3 * up(1, 1) ** 2 * up(2, 1)
    prof = multiplicity_profile(p)
    assert prof == {1: 1, 2: 1, 3: 1}


def test_independence_of_shifted_pair():
    cert = mult_independence(up(0, 1), up(1, 1))
    assert cert.kind == INDEPENDENT


def test_dependence_of_powers():
    # z^2 = (z)^2, so z and z^2 satisfy a multiplicative relation
    cert = mult_independence(up(0, 1), up(0, 0, 1))
    assert cert.kind == DEPENDENT
    assert (cert.m1, cert.m2) != (0, 0)


def test_dependence_with_constants():
    # (2z)^2 * (1/4 z^-2): 4z^2 and 2z are dependent through the constants
    cert = mult_independence(up(0, 2), up(0, 0, 4))
    assert cert.kind == DEPENDENT


def test_constant_inputs_are_classified():
    # no relation 2^m * 3^n = 1 exists, while 1 and 1 trivially satisfy one
    assert mult_independence(up(2), up(3)).kind == INDEPENDENT
    assert mult_independence(up(1), up(1)).kind == DEPENDENT
    # 2^2 * (1/4)^1 = 1
    half = UniPoly.constant(gr(Fraction(1, 4)))
    assert mult_independence(up(2), half).kind == DEPENDENT


def test_table_stabilizes_on_classic_pair():
    rep = ar_accumulate(up(0, 1), up(1, 1), 12)
    by_k = dict(rep.table)
    for k in range(1, 13):
        if k in (6, 12):
            assert by_k[k].monic() == up(1, 1, 1)
        else:
            assert by_k[k].is_constant()
    assert rep.stabilized_F.monic() == up(1, 1, 1)
    assert rep.stabilized_at == 6
    assert rep.consistency


def test_accumulate_rejects_dependent_inputs():
    with pytest.raises(DependentInputs):
        ar_accumulate(up(0, 1), up(0, 0, 1), 6)


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=10, deadline=None)
def test_gcd_divides_stabilized_f(seed):
    rng = random.Random(seed)
    P1 = random_unipoly(rng, rng.randint(1, 2), 2)
    P2 = random_unipoly(rng, rng.randint(1, 2), 2)
    if mult_independence(P1, P2).kind != INDEPENDENT:
        return
    rep = ar_accumulate(P1, P2, 10)
    for k, g in rep.table:
        sf = g.monic()
        d = uni_gcd(sf, sf.derivative()) if sf.degree > 0 else UniPoly.one()
        reduced = sf.exact_div(d) if d.degree > 0 else sf
        if reduced.degree > 0:
            assert reduced.divides(rep.stabilized_F) or rep.stabilized_F.degree == 0
