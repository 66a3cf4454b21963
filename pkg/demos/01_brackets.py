"""Brackets of the twisted Heisenberg-Virasoro algebra, computed exactly."""

# %%
from twisted_hv import I, L, LieElement, bracket, bracket_basis, verify_jacobi
from twisted_hv.frontend.serialize import format_lie

# %% Basis brackets. Central terms appear only when the indices cancel.
for x, y in [(L(1), L(-1)), (L(2), L(-2)), (L(1), I(2)), (L(1), I(-1)), (I(3), I(-3)), (I(2), I(5))]:
    print(f"[{x!r}, {y!r}] = {format_lie(bracket_basis(x, y))}")

# %% The bracket is bilinear, with coefficients that may be central polynomials.
x = LieElement.of(L(1), 2) + LieElement.of(I(1))
y = LieElement.of(L(-1))
print("[2 L[1] + I[1], L[-1]] =", format_lie(bracket(x, y)))

# %% Antisymmetry and the Jacobi identity, exhaustively over a window.
report = verify_jacobi((-4, 4))
print(f"window -4..4: {report.pairs_checked} pairs, {report.triples_checked} triples, ok={report.ok}")
