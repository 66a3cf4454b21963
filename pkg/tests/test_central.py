from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from twisted_hv.central import C, C_I, C_LI, ONE, ZERO, CentralPoly, as_poly, poly_sum

from oracles import c, cI, cLI, to_sympy

rationals = st.fractions(max_denominator=12).filter(lambda q: abs(q) < 50)
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), rationals, max_size=5
).map(CentralPoly)


@given(polys, polys, polys)
def test_ring_operations_match_sympy(p, q, r):
    P, Q, R = to_sympy(p), to_sympy(q), to_sympy(r)
    assert sympy.expand(to_sympy(p + q) - (P + Q)) == 0
    assert sympy.expand(to_sympy(p - q) - (P - Q)) == 0
    assert sympy.expand(to_sympy(p * q * r) - P * Q * R) == 0
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, rationals, rationals, rationals)
def test_evaluate_matches_sympy(p, a, b, d):
    expected = to_sympy(p).subs({c: a, cI: b, cLI: d})
    assert p.evaluate(a, b, d) == Fraction(int(sympy.numer(expected)), int(sympy.denom(expected)))


@given(polys, rationals)
def test_partial_substitution(p, value):
    partial = p.substitute({"CI": value})
    assert partial.degree(1) <= 0
    assert partial.evaluate(2, 0, 3) == p.evaluate(2, value, 3)


def test_zero_normalisation():
    assert (C - C).is_zero()
    assert CentralPoly({(1, 0, 0): 0}) == ZERO
    assert ZERO.degree() == -1
    assert not ZERO and ONE


def test_powers_and_degrees():
    p = (C + C_LI) ** 3
    assert p.degree() == 3 and p.degree(2) == 3 and p.degree(1) == 0
    assert p.terms[(1, 0, 2)] == 3
    assert ONE == 1 and as_poly(Fraction(1, 2)).constant_term() == Fraction(1, 2)
    with pytest.raises(ValueError):
        C ** -1


def test_text_form():
    assert str(36 * C_I * C_LI - 48 * C_LI**3) == "-48*CLI^3 + 36*CI*CLI"
    assert str(Fraction(1, 2) * C - 1) == "1/2*C - 1"
    assert str(ZERO) == "0"


def test_poly_sum_and_coercion():
    assert poly_sum([C, C_I, -C]) == C_I
    with pytest.raises(TypeError):
        as_poly(1.5)
    with pytest.raises(ValueError):
        CentralPoly({(1, -1, 0): 1})
