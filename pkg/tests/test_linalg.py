from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from twisted_hv.linalg import nullspace, rank

entries = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw):
    rows = draw(st.integers(0, 5))
    cols = draw(st.integers(1, 5))
    # low-rank matrices are the interesting case, so mix in repeated rows
    base = [draw(st.lists(entries, min_size=cols, max_size=cols)) for _ in range(rows)]
    if base and draw(st.booleans()):
        base.append([2 * x for x in base[0]])
    return base, cols


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_nullspace_matches_sympy(data):
    rows, cols = data
    kernel = nullspace(rows, cols)
    M = sympy.Matrix(rows) if rows else sympy.zeros(0, cols)
    assert len(kernel) == len(M.nullspace()) == cols - rank(rows, cols)
    for vec in kernel:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0
    if kernel:
        assert sympy.Matrix([list(v) for v in kernel]).rank() == len(kernel)


def test_known_kernel():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    assert rank(rows, 3) == 1
    assert nullspace(rows, 3) == [[-2, 1, 0], [-3, 0, 1]]
    assert nullspace([], 2) == [[1, 0], [0, 1]]
