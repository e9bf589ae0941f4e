import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
import sympy
from sympy.combinatorics import Permutation
from hypothesis import given
from hypothesis import strategies as st

from ncch.freealg import FreeAlgebra
from ncch.grassmann import GrassmannAlgebra, random_element
from ncch.matrix import (
    MatrixRing,
    RingMatrix,
    commutator_parts,
    conjugate,
    minor,
    rational_adj,
    rational_charpoly,
    rational_det,
    rational_inverse,
    sadj,
    sadj_minor,
    sdet,
    trace,
)
from ncch.perm import CapError
from ncch.rings import QQ
from ncch.theorems import generic_matrix

from conftest import frac_matrix


def brute_sdet(A):
    """Direct double sum over pairs of permutations, independent of the library kernels."""
    n = A.n
    total = A.ring.zero
    for alpha in itertools.permutations(range(n)):
        for beta in itertools.permutations(range(n)):
            s = Permutation(list(alpha)).signature()
            s *= Permutation(list(beta)).signature()
            term = A.ring.one
            for t in range(n):
                term = term * A.rows[alpha[t]][beta[t]]
            total = total + s * term
    return total


def qq(rows):
    return RingMatrix(QQ, frac_matrix(rows))


def sym(M):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M.rows])


rational_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=n, max_size=n),
        min_size=n, max_size=n,
    )
)


def test_generic_2x2(generic2, abcd):
    a, b, c, d = abcd.gens
    assert sdet(generic2) == a * d + d * a - b * c - c * b
    assert sadj(generic2) == RingMatrix(abcd, [[d, -b], [-c, a]])


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("formula", ["alpha-beta", "tau-rho"])
def test_sdet_matches_brute_force(n, formula):
    A = generic_matrix(n)
    assert sdet(A, formula) == brute_sdet(A)


def test_formulas_agree_n4():
    A = generic_matrix(4)
    assert sdet(A, "alpha-beta") == sdet(A, "tau-rho")
    assert sadj(A, "alpha-beta") == sadj(A, "tau-rho")


def test_unknown_formula(generic2):
    with pytest.raises(ValueError):
        sdet(generic2, "leibniz")


@pytest.mark.parametrize("n", range(1, 6))
def test_sdet_identity(n):
    assert sdet(RingMatrix.identity(QQ, n)) == factorial(n)


def test_n1_degenerate(abcd):
    a = abcd.gen("a")
    A = RingMatrix(abcd, [[a]])
    assert sdet(A) == a
    assert sadj(A) == RingMatrix.identity(abcd, 1)
    parts = commutator_parts(A)
    assert not parts.C and not parts.D


def test_cap():
    with pytest.raises(CapError):
        sdet(RingMatrix.identity(QQ, 7))


@given(rational_matrices)
def test_rational_sdet_and_adjoint(rows):
    A = qq(rows)
    n = A.n
    S = sym(A)
    assert sdet(A) == factorial(n) * Fraction(str(S.det()))
    assert rational_det(A) == Fraction(str(S.det()))
    if n > 1:
        adj = S.adjugate()
        expected = RingMatrix(QQ, [[factorial(n - 1) * Fraction(str(adj[i, j])) for j in range(n)] for i in range(n)])
        assert sadj(A) == expected
        assert rational_adj(A) == RingMatrix(QQ, [[Fraction(str(adj[i, j])) for j in range(n)] for i in range(n)])
    parts = commutator_parts(A)
    assert not parts.C and not parts.D


@given(rational_matrices)
def test_rational_charpoly_against_sympy(rows):
    A = qq(rows)
    t = sympy.Symbol("t")
    expected = sympy.Poly(sym(A).charpoly(t).as_expr(), t).all_coeffs()[::-1]
    assert rational_charpoly(A) == [Fraction(str(c)) for c in expected]


@given(rational_matrices)
def test_rational_inverse(rows):
    A = qq(rows)
    if rational_det(A) == 0:
        with pytest.raises(ValueError, match="singular"):
            rational_inverse(A)
    else:
        assert A * rational_inverse(A) == RingMatrix.identity(QQ, A.n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sadj_minor_all_entries(n):
    A = generic_matrix(n)
    star = sadj(A)
    for r in range(n):
        for s in range(n):
            assert star[r, s] == sadj_minor(A, r, s)
            if n > 1:
                assert sadj_minor(A, r, s) == (-1) ** (r + s) * sdet(minor(A, s, r))


@pytest.mark.parametrize("n", [2, 3])
def test_traces_of_parts(n):
    A = generic_matrix(n)
    parts = commutator_parts(A)
    lam = sdet(A)
    # sum_r of the diagonal of A* A recovers the determinant
    assert trace(sadj(A) * A) == lam
    assert trace(A * sadj(A)) == lam


def test_matrix_arithmetic(abcd, generic2):
    a, b, c, d = abcd.gens
    I = RingMatrix.identity(abcd, 2)
    assert generic2 * I == generic2 == I @ generic2
    assert generic2 ** 0 == I
    assert generic2 ** 2 == generic2 * generic2
    assert (generic2 * generic2)[0, 0] == a * a + b * c
    assert generic2.lmul(a)[0, 1] == a * b
    assert generic2.rmul(a)[0, 1] == b * a
    assert 2 * generic2 == generic2 + generic2
    assert not (generic2 - generic2)
    with pytest.raises(ValueError):
        RingMatrix(abcd, [[a, b]])


def test_matrix_ring_units():
    M = MatrixRing(2, QQ)
    E12, E21 = M.unit(0, 1), M.unit(1, 0)
    assert E12 * E21 == M.unit(0, 0)
    assert E12 * E12 == M.zero
    U = MatrixRing(2, QQ, upper=True)
    with pytest.raises(ValueError):
        U.unit(1, 0)


def test_sdet_over_upper_triangular():
    # entries in U2; sdet of the 1x1 matrix is the entry itself
    U = MatrixRing(2, QQ, upper=True)
    x = U.unit(0, 1) + U.one
    assert sdet(RingMatrix(U, [[x]])) == x


def test_conjugate():
    rng = random.Random(5)
    E = GrassmannAlgebra(4)
    A = RingMatrix(E, [[random_element(4, 2, 3, rng) for _ in range(2)] for _ in range(2)])
    P = qq([[1, 2], [0, 1]])
    B = conjugate(P, A)
    assert conjugate(rational_inverse(P), B) == A
    assert trace(B) == trace(A)
    with pytest.raises(ValueError, match="singular"):
        conjugate(qq([[1, 2], [2, 4]]), A)


def test_conjugate_rational_preserves_det():
    A = qq([[1, 2], [3, 4]])
    P = qq([[2, 1], [1, 1]])
    assert rational_det(conjugate(P, A)) == rational_det(A)


def test_sdet_grassmann_generic_rank():
    # for E with rank 4 and a diagonal matrix of odd generators the sdet is a sum of
    # sign-adjusted products, checked against the brute force sum
    E = GrassmannAlgebra(4)
    v = E.gens
    A = RingMatrix(E, [[v[0], v[1]], [v[2], v[3] + E.one]])
    assert sdet(A) == brute_sdet(A)
    assert sdet(A, "tau-rho") == brute_sdet(A)


def test_free_algebra_names_in_generic():
    A = generic_matrix(2)
    assert A.ring == FreeAlgebra("abcd")


@pytest.mark.parametrize("P", [[[1, 0], [0, 1]], [[2, 0], [0, 1]], [[0, 1], [1, 0]]])
def test_conjugation_invariance_2x2(P):
    A = generic_matrix(2)
    P = qq(P)
    B = conjugate(P, A)
    assert sdet(B) == sdet(A)
    assert sadj(B) == conjugate(P, sadj(A))


def test_conjugation_invariance_random_3x3():
    from ncch.theorems import random_invertible

    A = generic_matrix(3)
    P = random_invertible(3, random.Random(3))
    assert sadj(conjugate(P, A)) == conjugate(P, sadj(A))
    assert sdet(conjugate(P, A)) == sdet(A)
