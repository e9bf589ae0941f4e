"""
Left and right Cayley-Hamilton identities
=========================================

p(t) = sdet(tI - A) has central coefficients only when R is commutative.
In general the identity needs matrix coefficients C(i), D(i) on the left
and on the right.
"""

from ncch import poly_commutator_parts
from ncch.exprparse import format_element, format_matrix
from ncch.theorems import CheckConfig, generic_matrix, instances
from ncch.tpoly import ch_left_eval, ch_right_eval

A = generic_matrix(2)
data = poly_commutator_parts(A)
print("p(t) =", format_element(data.p))
for i, mu in enumerate(data.mu):
    print(f"mu_{i} =", format_element(mu))
for i, C in enumerate(data.C):
    print(f"C({i}) =", format_matrix(C).replace("\n", "; "))

print("left :", not ch_left_eval(A, data))
print("right:", not ch_right_eval(A, data))

# a 3x3 Grassmann matrix
_, G, _ = next(instances(CheckConfig("grassmann:6", 3, 1, 0)))
gdata = poly_commutator_parts(G)
print(not ch_left_eval(G, gdata), not ch_right_eval(G, gdata))
