"""
Symmetric determinant of a generic matrix
=========================================

Entries are free noncommuting generators, so every identity we see here
holds for all substitutions.
"""

from ncch import FreeAlgebra, RingMatrix, format_matrix, sadj, sdet, trace

F = FreeAlgebra("abcd")
a, b, c, d = F.gens
A = RingMatrix(F, [[a, b], [c, d]])

# both double-sum formulas give the same polynomial
print("sdet(A) =", sdet(A))
print("tau-rho  =", sdet(A, "tau-rho"))

# the symmetric adjoint, and the two trace formulas for sdet
star = sadj(A)
print("A* =")
print(format_matrix(star))
print(trace(A * star) == sdet(A) == trace(star * A))

# over the rationals everything collapses to n! det
from fractions import Fraction

from ncch import QQ, rational_det

B = RingMatrix(QQ, [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]])
print(sdet(B), "=", 2, "*", rational_det(B))
