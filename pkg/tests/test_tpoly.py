import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncch.grassmann import GrassmannAlgebra, random_element
from ncch.matrix import MatrixRing, RingMatrix, commutator_parts, rational_charpoly, trace
from ncch.rings import QQ
from ncch.theorems import generic_matrix
from ncch.tpoly import (
    TPoly,
    TPolyRing,
    assemble,
    ch_left_eval,
    ch_right_eval,
    char_matrix,
    graded_split_poly,
    leading_coefficient_ok,
    matrix_coefficients,
    poly_commutator_parts,
    sym_char_poly,
    telescoped_coefficient,
)

from conftest import frac_matrix


def grassmann_matrix(n, rank, seed):
    rng = random.Random(seed)
    E = GrassmannAlgebra(rank)
    return RingMatrix(E, [[random_element(rank, 2, 3, rng) for _ in range(n)] for _ in range(n)])


def test_tpoly_arithmetic():
    R = TPolyRing(QQ)
    t = R.t
    p = (t - 1) * (t + 1)
    assert p.coeffs == (-1, 0, 1)
    assert p.degree == 2
    assert p.coeff(5) == 0
    assert p.evaluate(Fraction(3)) == 8
    assert (p - p).degree == -1
    assert 2 * t == t + t


def test_t_is_central_over_free(abcd):
    R = TPolyRing(abcd)
    a, b = abcd.gen("a"), abcd.gen("b")
    x = R.const(a) + R.t * R.const(b)
    assert R.t * x == x * R.t


def test_char_matrix(generic2):
    M = char_matrix(generic2)
    assert M.ring == TPolyRing(generic2.ring)
    assert M.map(lambda p: p.coeff(0), generic2.ring) == -generic2
    assert M.map(lambda p: p.coeff(1), generic2.ring) == RingMatrix.identity(generic2.ring, 2)


def test_sym_char_poly_2x2(abcd, generic2):
    a, b, c, d = abcd.gens
    p = sym_char_poly(generic2)
    assert p.coeffs == (a * d + d * a - b * c - c * b, -2 * a - 2 * d, abcd.from_rational(2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_leading_and_subleading(n):
    A = generic_matrix(n)
    data = poly_commutator_parts(A)
    assert leading_coefficient_ok(data)
    assert data.mu[n] == factorial(n)
    assert data.mu[n - 1] == -factorial(n) * trace(A)
    assert data.mu[0] == (-1) ** n * commutator_parts(A).lam


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_rational_charpoly_is_scaled_classical(rows):
    A = RingMatrix(QQ, frac_matrix(rows))
    data = poly_commutator_parts(A)
    assert list(data.mu) == [factorial(3) * c for c in rational_charpoly(A)]
    assert all(not C for C in data.C) and all(not D for D in data.D)


@pytest.mark.parametrize("n", [2, 3])
def test_extreme_coefficients(n):
    A = generic_matrix(n)
    data = poly_commutator_parts(A)
    sign = (-1) ** n
    parts = commutator_parts(A)
    assert data.C[0] == sign * parts.C
    assert data.D[0] == sign * parts.D
    assert not data.C[n] and not data.D[n]
    assert data.Cm(-1) == RingMatrix.zeros(A.ring, n) == data.Dm(n + 1)
    assert data.mu_at(n + 1) == A.ring.zero


@pytest.mark.parametrize("n", [2, 3])
def test_traces_of_coefficients_vanish(n):
    data = poly_commutator_parts(generic_matrix(n))
    for i in range(n + 1):
        assert trace(data.C[i]) == generic_matrix(n).ring.zero
        assert trace(data.D[i]) == generic_matrix(n).ring.zero


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cayley_hamilton_generic(n):
    A = generic_matrix(n)
    data = poly_commutator_parts(A)
    zero = RingMatrix.zeros(A.ring, n)
    assert ch_left_eval(A, data) == zero
    assert ch_right_eval(A, data) == zero


@pytest.mark.parametrize("seed", range(5))
def test_cayley_hamilton_grassmann(seed):
    A = grassmann_matrix(3, 6, seed)
    data = poly_commutator_parts(A)
    assert not ch_left_eval(A, data)
    assert not ch_right_eval(A, data)


def test_cayley_hamilton_over_matrix_units():
    M = MatrixRing(2, QQ)
    A = RingMatrix(M, [[M.unit(0, 1), M.one], [M.unit(1, 0), M.zero]])
    data = poly_commutator_parts(A)
    assert not ch_left_eval(A, data)
    assert not ch_right_eval(A, data)


def test_ch_dimension_mismatch():
    data = poly_commutator_parts(generic_matrix(2))
    with pytest.raises(ValueError):
        ch_left_eval(generic_matrix(3), data)


def test_graded_split():
    E = GrassmannAlgebra(4)
    v1, v2, v3, v4 = E.gens
    A = RingMatrix(E, [[v1 + v2 * v3, v4], [v2, v3 + E.one]])
    p0, p1 = graded_split_poly(sym_char_poly(A))
    assert p0 + p1 == sym_char_poly(A)
    assert p1.coeff(1) == -2 * (v1 + v3)
    with pytest.raises(TypeError):
        graded_split_poly(sym_char_poly(generic_matrix(2)))


@pytest.mark.parametrize("seed", range(6))
def test_telescoped_coefficients(seed):
    A = grassmann_matrix(2 + seed % 2, 6, seed)
    n = A.n
    data = poly_commutator_parts(A)
    _, p1 = graded_split_poly(data.p)
    A1 = A.map(A.ring.odd_part)
    for i in range(-1, n + 1):
        lhs = telescoped_coefficient(A, data, i)
        assert lhs == A1.lmul(p1.coeff(i + 1)) * -2


def test_assemble_round_trip(generic2):
    M = char_matrix(generic2)
    mats = matrix_coefficients(M, 2)
    assert assemble(mats) == M
    data = poly_commutator_parts(generic2)
    assert assemble(list(data.C)) == data.Ct
