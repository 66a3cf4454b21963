from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from twisted_hv import IndexRangeError, UsageError
from twisted_hv.central import C, C_I, C_LI
from twisted_hv.structure import (
    MAX_INDEX,
    Generator,
    I,
    L,
    LieElement,
    basis_window,
    bracket,
    bracket_basis,
    grade,
    jacobi_sum,
    verify_jacobi,
)

from oracles import ref_bracket, to_sympy

gens = st.builds(Generator, st.sampled_from("LI"), st.integers(-50, 50))


def test_printed_examples():
    assert bracket_basis(L(1), L(-1)) == LieElement.of(L(0), -2)
    assert bracket_basis(L(2), L(-2)) == LieElement.of(L(0), -4) + LieElement.central(C * Fraction(1, 2))
    assert bracket_basis(L(1), I(2)) == LieElement.of(I(3), 2)
    assert bracket_basis(L(-1), I(1)) == LieElement.of(I(0), 1)
    assert bracket_basis(I(1), I(-1)) == LieElement.central(C_I)
    assert bracket_basis(L(1), I(-1)) == LieElement.of(I(0), -1) + LieElement.central(C_LI * 2)
    assert bracket_basis(I(3), I(4)).is_zero()


@given(gens, gens)
def test_matches_reference_constants(x, y):
    value = bracket_basis(x, y)
    gen, coeff, central = ref_bracket(x, y)
    expected_gens = {gen: coeff} if gen is not None and coeff != 0 else {}
    got = {(g[0], g[1]): to_sympy(p) for g, p in value.generator_terms.items()}
    assert got == expected_gens
    assert sympy.expand(to_sympy(value.central_term) - central) == 0


@given(gens, gens)
def test_antisymmetry(x, y):
    assert bracket_basis(x, y) == -bracket_basis(y, x)


@given(gens, gens)
def test_grade_additivity(x, y):
    value = bracket_basis(x, y)
    for g in value.generator_terms:
        assert grade(g) == grade(x) + grade(y)
    if value.central_term:
        assert grade(x) + grade(y) == 0


@given(gens, gens, gens)
def test_jacobi_random(x, y, z):
    assert jacobi_sum(x, y, z).is_zero()


@given(gens)
def test_centrals_are_central(x):
    for k in (C, C_I, C_LI):
        assert bracket(LieElement.of(x), LieElement.central(k)).is_zero()


def test_bilinearity():
    x = LieElement.of(L(1), 3) + LieElement.of(I(-2), Fraction(-1, 2))
    y = LieElement.of(L(-1)) + LieElement.of(I(2), 5) + LieElement.central(C)
    total = LieElement()
    for gx, cx in x.generator_terms.items():
        for gy, cy in y.generator_terms.items():
            total = total + bracket_basis(gx, gy).scale(cx * cy)
    assert bracket(x, y) == total
    assert bracket(x, x).is_zero()


def test_exhaustive_small_window():
    report = verify_jacobi((-3, 3))
    assert report.ok
    assert report.pairs_checked == 14**2
    assert report.triples_checked == 14**3


def test_basis_window_layout():
    assert basis_window(-1, 1) == [L(-1), L(0), L(1), I(-1), I(0), I(1)]


def test_index_overflow():
    with pytest.raises(IndexRangeError):
        Generator("L", MAX_INDEX + 1)
    with pytest.raises(IndexRangeError):
        bracket_basis(L(MAX_INDEX), L(1))
    assert bracket_basis(L(MAX_INDEX), L(-1)) == LieElement.of(L(MAX_INDEX - 1), -1 - MAX_INDEX)


def test_bad_generators():
    with pytest.raises(ValueError):
        Generator("K", 0)
    with pytest.raises(TypeError):
        Generator("L", 1.5)
    assert issubclass(UsageError, ValueError)


def test_generator_repr_and_identity():
    assert repr(L(-2)) == "L[-2]"
    assert L(3) == Generator("L", 3) and hash(L(3)) == hash(("L", 3))
    assert L(3).kind == "L" and I(-4).index == -4
