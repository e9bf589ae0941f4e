"""
Identities in a graded ring
===========================

Split everything into even and odd parts.  Then AC - DA = 2 lambda_1 A_1,
and the coefficient matrices of the two Cayley-Hamilton identities are
tied together by

    C(i) - D(i) - A C(i+1) + D(i+1) A = -2 mu_{i+1}^(1) A_1.
"""

from ncch import commutator_parts, sdet
from ncch.theorems import CheckConfig, instances
from ncch.tpoly import graded_split_poly, poly_commutator_parts, telescoped_coefficient

_, A, _ = next(instances(CheckConfig("grassmann:6", 2, 1, 4)))
E = A.ring
A1 = A.map(E.odd_part)

parts = commutator_parts(A)
lam1 = E.odd_part(sdet(A))
print(A * parts.C - parts.D * A == A1.lmul(2 * lam1))

data = poly_commutator_parts(A)
_, p1 = graded_split_poly(data.p)
for i in range(-1, A.n + 1):
    M = telescoped_coefficient(A, data, i)
    print(i, M == A1.lmul(-2 * p1.coeff(i + 1)), not M * M)
