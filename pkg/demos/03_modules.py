"""Truncated Verma modules and the intermediate series."""

# %%
from fractions import Fraction

from twisted_hv import (
    IntermediateSeriesParams,
    ModuleVector,
    VermaParams,
    act,
    check_module_axioms,
    evaluate,
    find_annihilated_vectors,
    intseries_new,
    is_harish_chandra_window,
    support,
    verma_new,
)
from twisted_hv.structure import I, L

# %% A Verma module cut off at depth 5. Weight spaces count 2-colored partitions.
verma = verma_new(VermaParams(lam=Fraction(3, 2), h_I=1, c=Fraction(1, 2), c_I=2, c_LI=Fraction(-1, 3), depth=5))
for weight, dim in support(verma, (-5, 1)).entries:
    print(f"dim M[{weight}] = {dim}")

# %% Acting on basis vectors. Positive generators push towards the top and kill v.
v = verma.highest_weight_vector()
w = act(verma, evaluate("L[-1]*I[-1]"), v)
print("L[-1] I[-1] v =", verma.format_vector(w))
print("L[1] applied  =", verma.format_vector(act(verma, L(1), w)))
print("I[1] applied  =", verma.format_vector(act(verma, I(1), w)))

# %% Vectors killed by L_1, L_2 and I_1. At generic parameters only v itself.
top = verma.base_weight
for weight in (top, top - 1, top - 2):
    kernel = find_annihilated_vectors(verma, [L(1), L(2), I(1)], weight)
    print(weight, [verma.format_vector(u) for u in kernel])

# %% Tuned so that I_-1 v becomes singular.
tuned = verma_new(VermaParams(lam=0, h_I=2, c=0, c_I=0, c_LI=1, depth=2))
print([tuned.format_vector(u) for u in find_annihilated_vectors(tuned, [L(1), L(2), I(1)], -1)])

# %% The representation axioms hold exactly on the truncated module.
report = check_module_axioms(verma, (-2, 2))
print(f"Verma: {report.checked} checks, {len(report.skipped)} skipped at the cut, ok={report.ok}")

# %% Intermediate series: one vector per weight alpha + k.
series = intseries_new(IntermediateSeriesParams(alpha=Fraction(1, 3), beta=2, F=5, window=4))
for g, k in ((L(2), 0), (I(-1), 1), (L(-3), 2)):
    print(f"{g!r} v[{k}] =", series.format_vector(act(series, g, ModuleVector.basis(k))))
ok, dims = is_harish_chandra_window(series, (-4, 4))
print("Harish-Chandra on the window:", ok, dims.dims())
print("axioms:", check_module_axioms(series, (-3, 3)).ok)
