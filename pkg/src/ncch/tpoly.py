"""Polynomials in a central indeterminate t, and the symmetric characteristic polynomial.

``TPolyRing(R)`` is itself a ring, so the symmetric determinant and adjoint
kernels of :mod:`ncch.matrix` run unchanged on M_n(R[t]).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Any, Sequence

from . import matrix as ncmatrix
from .matrix import RingMatrix
from .rings import Ring, Scalar


class TPolyRing(Ring):
    def __init__(self, base: Ring):
        self.base = base
        self.graded = base.graded

    def __eq__(self, other):
        return isinstance(other, TPolyRing) and self.base == other.base

    def __hash__(self):
        return hash(("tpoly", self.base))

    def __repr__(self):
        return f"{self.base!r}[t]"

    @property
    def zero(self):
        return TPoly(self, ())

    @property
    def one(self):
        return TPoly(self, (self.base.one,))

    def from_rational(self, q):
        return TPoly(self, (self.base.from_rational(q),))

    @property
    def t(self):
        return TPoly(self, (self.base.zero, self.base.one))

    def const(self, x) -> "TPoly":
        return TPoly(self, (x,))

    def even_part(self, p):
        return p.map(self.base.even_part)

    def odd_part(self, p):
        return p.map(self.base.odd_part)


class TPoly:
    """Dense coefficient tuple c0, c1, ..., cd with no trailing zeros."""

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: TPolyRing, coeffs: Sequence[Any]):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self._hash = None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.base.zero

    def map(self, f) -> "TPoly":
        return TPoly(self.ring, [f(c) for c in self.coeffs])

    def _coerce(self, other):
        if isinstance(other, TPoly):
            return other
        if isinstance(other, Scalar):
            return self.ring.from_rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.map(lambda c: c * other)
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self.ring.zero
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                prod = x * y
                out[i + j] = prod if out[i + j] is None else out[i + j] + prod
        zero = self.ring.base.zero
        return TPoly(self.ring, [zero if c is None else c for c in out])

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.map(lambda c: other * c)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Scalar):
            return self == self.ring.from_rational(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def evaluate(self, x):
        """Sum of c_i x^i with coefficients on the left."""
        base = self.ring.base
        out, power = base.zero, base.one
        for c in self.coeffs:
            out = out + c * power
            power = power * x
        return out

    def __repr__(self):
        from .exprparse import format_element

        return f"TPoly({format_element(self)!r})"

    def __str__(self):
        from .exprparse import format_element

        return format_element(self)


def char_matrix(A: RingMatrix) -> RingMatrix:
    """t I_n - A over R[t]."""
    R = TPolyRing(A.ring)
    n = A.n
    t = R.t
    return RingMatrix(
        R,
        [[(t if i == j else R.zero) - R.const(A.rows[i][j]) for j in range(n)] for i in range(n)],
    )


def matrix_coefficients(M: RingMatrix, count: int) -> list[RingMatrix]:
    """Split a matrix over R[t] into R-matrices M(0), ..., M(count-1)."""
    base = M.ring.base
    return [RingMatrix(base, [[x.coeff(i) for x in row] for row in M.rows]) for i in range(count)]


def assemble(mats: Sequence[RingMatrix]) -> RingMatrix:
    """Inverse of :func:`matrix_coefficients`: sum of M(i) t^i as a matrix over R[t]."""
    base = mats[0].ring
    R = TPolyRing(base)
    n = mats[0].n
    return RingMatrix(R, [[TPoly(R, [m.rows[i][j] for m in mats]) for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class CharPolyData:
    """mu[0..n] and the matrix coefficients C(0..n), D(0..n) of C(t), D(t)."""

    A: RingMatrix
    mu: tuple
    C: tuple
    D: tuple
    p: TPoly
    Ct: RingMatrix
    Dt: RingMatrix

    @property
    def n(self) -> int:
        return self.A.n

    def Cm(self, i: int) -> RingMatrix:
        """C(i), zero outside 0..n."""
        if 0 <= i < len(self.C):
            return self.C[i]
        return RingMatrix.zeros(self.A.ring, self.n)

    def Dm(self, i: int) -> RingMatrix:
        if 0 <= i < len(self.D):
            return self.D[i]
        return RingMatrix.zeros(self.A.ring, self.n)

    def mu_at(self, i: int):
        if 0 <= i < len(self.mu):
            return self.mu[i]
        return self.A.ring.zero


def sym_char_poly(A: RingMatrix) -> TPoly:
    """p(t) = sdet(t I_n - A)."""
    return ncmatrix.sdet(char_matrix(A))


def poly_commutator_parts(A: RingMatrix) -> CharPolyData:
    n = A.n
    parts = ncmatrix.commutator_parts(char_matrix(A))
    p = parts.lam
    mu = tuple(p.coeff(i) for i in range(n + 1))
    return CharPolyData(
        A=A,
        mu=mu,
        C=tuple(matrix_coefficients(parts.C, n + 1)),
        D=tuple(matrix_coefficients(parts.D, n + 1)),
        p=p,
        Ct=parts.C,
        Dt=parts.D,
    )


def leading_coefficient_ok(data: CharPolyData) -> bool:
    return data.mu[-1] == data.A.ring.from_rational(factorial(data.n))


def graded_split_poly(p: TPoly) -> tuple[TPoly, TPoly]:
    """(p0, p1): coefficientwise even and odd parts."""
    R = p.ring
    if not R.graded:
        raise TypeError(f"{R.base!r} has no GL-grading")
    return R.even_part(p), R.odd_part(p)


def ch_left_eval(A: RingMatrix, data: CharPolyData) -> RingMatrix:
    """Sum over i of (mu_i I + C(i)) A^i; zero by the left Cayley-Hamilton identity."""
    _check_dims(A, data)
    n = A.n
    total = RingMatrix.zeros(A.ring, n)
    power = RingMatrix.identity(A.ring, n)
    for i in range(n + 1):
        coeff = RingMatrix.scalar(A.ring, n, data.mu[i]) + data.C[i]
        total = total + coeff * power
        power = power * A
    return total


def ch_right_eval(A: RingMatrix, data: CharPolyData) -> RingMatrix:
    """Sum over i of A^i (mu_i I + D(i))."""
    _check_dims(A, data)
    n = A.n
    total = RingMatrix.zeros(A.ring, n)
    power = RingMatrix.identity(A.ring, n)
    for i in range(n + 1):
        coeff = RingMatrix.scalar(A.ring, n, data.mu[i]) + data.D[i]
        total = total + power * coeff
        power = power * A
    return total


def _check_dims(A, data):
    if A.n != data.n or len(data.C) != A.n + 1 or len(data.D) != A.n + 1:
        raise ValueError("CharPolyData does not belong to a matrix of this size")


def telescoped_coefficient(A: RingMatrix, data: CharPolyData, i: int) -> RingMatrix:
    """C(i) - D(i) - A C(i+1) + D(i+1) A with C, D zero outside 0..n."""
    return data.Cm(i) - data.Dm(i) - A * data.Cm(i + 1) + data.Dm(i + 1) * A
