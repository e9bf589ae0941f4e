"""
Commutator parts C and D
========================

C = n A*A - sdet(A) I and D = n AA* - sdet(A) I.  Their entries are sums
of commutators, which is easy to test in the free algebra: a polynomial is
a sum of commutators exactly when the coefficients on every cyclic class
of words add up to zero.
"""

from ncch import commutator_parts, is_commutator_sum, trace
from ncch.exprparse import format_matrix
from ncch.theorems import generic_matrix

A = generic_matrix(2)
parts = commutator_parts(A)
print("C =")
print(format_matrix(parts.C))
print("D =")
print(format_matrix(parts.D))

# every entry is in [R, R] and the traces vanish, for n = 3 as well
for n in (2, 3):
    p = commutator_parts(generic_matrix(n))
    entries = [x for M in (p.C, p.D) for _, _, x in M.entries()]
    print(n, all(map(is_commutator_sum, entries)), not trace(p.C), not trace(p.D))

# AC - DA is the entrywise commutator with lambda = sdet(A)
lam = parts.lam
print(A * parts.C - parts.D * A == A.map(lambda x: lam * x - x * lam))
