"""Straightening in the enveloping algebra and the cubic identity.

Working modulo the left ideal generated by every I_k, the element
I_-1^3 (L_1^3 - 6 L_2 L_1 + 6 L_3) reduces to a pure central polynomial.
"""

# %%
from fractions import Fraction

from twisted_hv import (
    GeneratorOrder,
    evaluate,
    normal_order,
    reduce_mod_left_ideal,
    specialize_centrals,
)
from twisted_hv.structure import I, L

# %% PBW normal form. Out-of-order neighbours swap and leave a bracket behind.
print(normal_order((L(2), L(1))))
print(normal_order((I(1), I(-1))))
print(normal_order((L(1), I(1)), GeneratorOrder(last=(L(1),))))

# %% The cubic factor, then the full product with I_-1^3 in front.
cubic = evaluate("L[1]^3 - 6*L[2]*L[1] + 6*L[3]")
print("cubic =", cubic)
product = evaluate("I[-1]^3") * cubic
print("terms in the product:", len(product.terms))

# %% Reduction modulo U(L) I_k. Only a multiple of c_LI^3 survives.
residue = reduce_mod_left_ideal(product, "I")
print("residue =", residue)

# %% The answer does not depend on which I-maximal order is used.
for order in (GeneratorOrder(last=(I(-1),)), GeneratorOrder(last=(I(2), I(0), I(-1)))):
    print(order.describe(), "->", reduce_mod_left_ideal(product, "I", order=order))

# %% Specialising the central charge.
print("at c_LI = 1/2:", specialize_centrals(residue, c_LI=Fraction(1, 2)))
print("at c_LI = 0:  ", specialize_centrals(residue, c_LI=0))

# %% The reduction respects the ideal: one factor of I_-1 leaves a residue linear in c_LI.
print(reduce_mod_left_ideal(evaluate("I[-1]") * cubic, "I"))
