from fractions import Fraction

import pytest
import sympy
from sympy.functions.combinatorial.numbers import partition

from twisted_hv import (
    IntermediateSeriesModule,
    IntermediateSeriesParams,
    ModuleVector,
    ResourceLimitError,
    TruncationError,
    VermaParams,
    act,
    check_module_axioms,
    evaluate,
    find_annihilated_vectors,
    intseries_new,
    is_harish_chandra_window,
    support,
    verma_new,
    weight_space_dim,
)
from twisted_hv.central import C, C_I, C_LI
from twisted_hv.modules import two_colored_partition_count, verma_words
from twisted_hv.structure import I, L, LieElement

from oracles import brute_force_two_colored

LAM, HI, CC, CI, CLI = Fraction(3, 2), Fraction(-2, 3), Fraction(5), Fraction(7, 4), Fraction(-1, 3)


@pytest.fixture(scope="module")
def verma():
    return verma_new(VermaParams(LAM, HI, CC, CI, CLI, depth=4))


def vec(module, text, on=()):
    return act(module, evaluate(text), ModuleVector.basis(on)) if text else ModuleVector.basis(on)


def test_dimensions_match_brute_force():
    module = verma_new(VermaParams(0, depth=8))
    def series(n):
        # coefficient of q^n in prod (1 - q^k)^-2, via sympy's partition function
        return sum(int(partition(a) * partition(n - a)) for a in range(n + 1))

    for n in range(7):
        assert len(module.basis[n]) == brute_force_two_colored(n)
    for n in range(9):
        assert len(module.basis[n]) == series(n) == weight_space_dim(module, -n)
    for n in range(9, 13):
        assert weight_space_dim(module, -n) == series(n)
    assert [two_colored_partition_count(n) for n in range(6)] == [1, 2, 5, 10, 20, 36]


def test_small_bases():
    assert verma_new(VermaParams(1, depth=0)).all_labels() == [()]
    assert set(verma_words(1)) == {(L(-1),), (I(-1),)}
    module = verma_new(VermaParams(1, depth=3))
    assert weight_space_dim(module, 1) == 1 and weight_space_dim(module, 2) == 0
    assert weight_space_dim(module, 0) == 2


def test_dims_below_truncation_are_exact():
    module = verma_new(VermaParams(0, depth=2))
    assert weight_space_dim(module, -5) == 36
    with pytest.raises(TruncationError):
        module.basis_at(-5)


def test_rank_one_actions_by_hand(verma):
    v = ModuleVector.basis(())
    # L_1 L_-1 v = [L_1, L_-1] v = -2 L_0 v
    assert vec(verma, "L[1]", (L(-1),)) == v * (-2 * LAM)
    assert vec(verma, "I[1]", (I(-1),)) == v * CI
    # L_2 L_-2 v = (-4 L_0 + c/2) v
    assert vec(verma, "L[2]", (L(-2),)) == v * (-4 * LAM + CC / 2)
    # L_1 I_-1 v = (-I_0 + 2 c_LI) v and I_1 L_-1 v = -I_0 v
    assert vec(verma, "L[1]", (I(-1),)) == v * (-HI + 2 * CLI)
    assert vec(verma, "I[1]", (L(-1),)) == v * (-HI)
    assert vec(verma, "L[-1]*I[-1]") == ModuleVector.basis((L(-1), I(-1)))
    # I_-1 L_-1 = L_-1 I_-1 - [L_-1, I_-1] = L_-1 I_-1 + I_-2
    assert vec(verma, "I[-1]*L[-1]") == ModuleVector.basis((L(-1), I(-1))) + ModuleVector.basis((I(-2),))


def test_verma_grading_and_centrals(verma):
    for label in verma.all_labels():
        v = ModuleVector.basis(label)
        assert act(verma, L(0), v) == v * verma.weight_of(label)
        assert act(verma, LieElement.central(C), v) == v * CC
        assert act(verma, LieElement.central(C_I), v) == v * CI
        assert act(verma, LieElement.central(C_LI), v) == v * CLI
    v = ModuleVector.basis(())
    assert act(verma, I(0), v) == v * HI
    for k in (1, 2, 3):
        assert act(verma, L(k), v) == 0 and act(verma, I(k), v) == 0


def test_shift_property(verma):
    for label in verma.all_labels():
        depth = -sum(g[1] for g in label)
        for g in (L(-1), I(-1), L(1), I(2), L(-2)):
            try:
                image = act(verma, g, ModuleVector.basis(label))
            except TruncationError:
                assert depth - g[1] > verma.depth
                continue
            for target, _ in image.items():
                assert verma.weight_of(target) == verma.weight_of(label) + g[1]


def test_enveloping_action_is_composition(verma):
    x = evaluate("L[2]*I[-1] - 3*L[1]^2 + CLI*I[0]")
    v = ModuleVector.basis((L(-2),)) + ModuleVector.basis((I(-1), I(-1))) * Fraction(1, 2)
    composed = ModuleVector()
    for word, coeff in x.terms.items():
        w = v
        for g in reversed(word):
            w = act(verma, g, w)
        composed = composed + w * coeff.evaluate(CC, CI, CLI)
    assert act(verma, x, v) == composed


def test_truncation_is_an_error(verma):
    with pytest.raises(TruncationError):
        act(verma, L(-1), ModuleVector.basis((L(-4),)))
    series = intseries_new(IntermediateSeriesParams(1, 0, 1, window=2))
    with pytest.raises(TruncationError):
        act(series, L(1), ModuleVector.basis(2))
    # a zero coefficient never leaves the window
    zero_f = intseries_new(IntermediateSeriesParams(1, 0, 0, window=2))
    assert act(zero_f, I(3), ModuleVector.basis(2)) == 0


def test_resource_budget():
    with pytest.raises(ResourceLimitError):
        verma_new(VermaParams(0, depth=30))


def test_intermediate_series_formula():
    module = intseries_new(IntermediateSeriesParams(Fraction(1, 3), 0, 1, window=3))
    assert act(module, L(2), ModuleVector.basis(0)) == ModuleVector({2: Fraction(1, 3)})
    assert act(module, I(2), ModuleVector.basis(0)) == ModuleVector.basis(2)
    assert act(module, I(0), ModuleVector.basis(-1)) == ModuleVector.basis(-1)
    for k in module.all_labels():
        v = ModuleVector.basis(k)
        assert act(module, L(0), v) == v * (Fraction(1, 3) + k)
        assert act(module, LieElement.central(C_I + C + C_LI), v) == 0


@pytest.mark.parametrize("point", [(Fraction(1, 3), 2, 5), (0, 0, 0), (Fraction(-7, 2), Fraction(3, 5), -1)])
def test_intermediate_series_axioms(point):
    module = intseries_new(IntermediateSeriesParams(*point, window=5))
    report = check_module_axioms(module, (-3, 3))
    assert report.ok and report.checked > 0
    assert report.skipped


def test_verma_axioms_depth_four_wide_window():
    module = verma_new(VermaParams(Fraction(-1, 5), 3, Fraction(1, 2), -2, Fraction(4, 3), depth=4))
    assert check_module_axioms(module, (-3, 3)).ok


class PerturbedSeries(IntermediateSeriesModule):
    def coefficient(self, g, k):
        value = super().coefficient(g, k)
        return value + 1 if g == L(2) else value


def test_mutation_is_detected():
    module = PerturbedSeries(IntermediateSeriesParams(Fraction(1, 3), 2, 5, window=4))
    report = check_module_axioms(module, (-3, 3))
    assert not report.ok
    pairs = {v["pair"] for v in report.violations}
    assert all(L(2) in pair or L(2) in _bracket_targets(pair) for pair in pairs)
    assert (L(1), L(1)) not in pairs and (L(-1), L(3)) in pairs


def _bracket_targets(pair):
    from twisted_hv.structure import bracket_basis

    return set(bracket_basis(*pair).generator_terms)


def test_annihilated_vectors_generic(verma):
    top = find_annihilated_vectors(verma, [L(1), L(2), I(1)], LAM)
    assert top == [ModuleVector.basis(())]
    assert find_annihilated_vectors(verma, [L(1), L(2), I(1)], LAM - 1) == []
    assert len(find_annihilated_vectors(verma, [], LAM - 2)) == 5


def test_singular_vector_at_depth_one():
    # det [[-2 lam, -h_I + 2 c_LI], [-h_I, c_I]] vanishes at lam = c_I = 0, h_I = 2 c_LI
    module = verma_new(VermaParams(0, 2, 0, 0, 1, depth=2))
    kernel = find_annihilated_vectors(module, [L(1), L(2), I(1)], -1)
    assert kernel == [ModuleVector.basis((I(-1),))]


def test_annihilated_vectors_match_sympy_nullspace(verma):
    gens = [L(1), L(2), I(1)]
    for n in range(1, 4):
        labels = verma.basis_at(LAM - n)
        targets = sorted({t for g in gens for lab in labels for t, _ in act(verma, g, ModuleVector.basis(lab)).items()}, key=repr)
        rows = [
            [act(verma, g, ModuleVector.basis(lab)).coefficient(t) for lab in labels]
            for g in gens
            for t in targets
        ]
        expected = sympy.Matrix(rows).nullspace() if rows else [None] * len(labels)
        got = find_annihilated_vectors(verma, gens, LAM - n)
        assert len(got) == len(expected)
        for v in got:
            for g in gens:
                assert act(verma, g, v) == 0


def test_intermediate_series_kernel():
    module = intseries_new(IntermediateSeriesParams(Fraction(1, 3), 1, 2, window=3))
    assert find_annihilated_vectors(module, [L(1)], Fraction(1, 3)) == []
    # alpha + k + beta = 0 at k = -1 when alpha = 0, beta = 1; F = 0 silences I
    flat = intseries_new(IntermediateSeriesParams(0, 1, 0, window=3))
    assert find_annihilated_vectors(flat, [L(1), I(1)], -1) == [ModuleVector.basis(-1)]


def test_support_reports(verma):
    module = verma_new(VermaParams(Fraction(1, 2), depth=3))
    report = support(module, (-3, 1))
    lam = Fraction(1, 2)
    assert report.entries == [(lam - 3, 10), (lam - 2, 5), (lam - 1, 2), (lam, 1), (lam + 1, 0)]
    assert support(module, (1, 0)).entries == []
    assert report.support == [lam - 3, lam - 2, lam - 1, lam]


def test_off_lattice_dimension_is_zero(verma):
    series = intseries_new(IntermediateSeriesParams(Fraction(1, 3), 0, 1, window=3))
    for k in range(-4, 4):
        assert weight_space_dim(verma, LAM + k + Fraction(1, 2)) == 0
        assert weight_space_dim(series, Fraction(1, 3) + k + Fraction(1, 7)) == 0
        assert weight_space_dim(series, Fraction(1, 3) + k) == 1


def test_harish_chandra_windows():
    module = verma_new(VermaParams(0, depth=4))
    ok, report = is_harish_chandra_window(module, (-4, 0))
    assert ok and report.dims() == [20, 10, 5, 2, 1]
    ok, report = is_harish_chandra_window(module, (3, 2))
    assert ok and report.entries == []


def test_vector_arithmetic():
    a = ModuleVector({1: Fraction(1, 2), 2: 3})
    assert a - a == 0 and not (a - a)
    assert (a * 2).coefficient(1) == 1
    assert ModuleVector({1: 0}) == ModuleVector()
