"""Square matrices over an arbitrary ring, with the symmetric determinant.

Indices are 0-based throughout.  Every product of ring elements is formed in
increasing position order, which matters over noncommutative rings.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import perm
from .rings import QQ, Ring, Scalar, to_rational

SDET_FORMULAS = ("alpha-beta", "tau-rho")


class RingMatrix:
    """Immutable n x n matrix with entries in ``ring``.

    Supports ``+``, ``-``, ``*`` (matrix product, or entrywise scaling by an
    int/Fraction) so a matrix is itself an element of :class:`MatrixRing`.
    """

    __slots__ = ("ring", "rows", "_hash")

    def __init__(self, ring: Ring, rows: Sequence[Sequence[Any]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError(f"matrix must be square, got row lengths {[len(r) for r in rows]}")
        self.ring = ring
        self.rows = rows
        self._hash = None

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "RingMatrix":
        return cls.scalar(ring, n, ring.one)

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> "RingMatrix":
        z = ring.zero
        return cls(ring, [[z] * n for _ in range(n)])

    @classmethod
    def scalar(cls, ring: Ring, n: int, x) -> "RingMatrix":
        """x * I_n, with x on the diagonal."""
        z = ring.zero
        return cls(ring, [[x if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, ring: Ring, n: int, i: int, j: int) -> "RingMatrix":
        """Matrix unit E_{i,j}."""
        z, one = ring.zero, ring.one
        return cls(ring, [[one if (r, c) == (i, j) else z for c in range(n)] for r in range(n)])

    def map(self, f, ring: Ring | None = None) -> "RingMatrix":
        return RingMatrix(ring or self.ring, [[f(x) for x in row] for row in self.rows])

    def _check(self, other: "RingMatrix"):
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        return RingMatrix(self.ring, [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        return RingMatrix(self.ring, [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.map(lambda x: x * other)
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        n = self.n
        cols = [[other.rows[k][j] for k in range(n)] for j in range(n)]
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = row[0] * col[0]
                for k in range(1, n):
                    acc = acc + row[k] * col[k]
                out_row.append(acc)
            out.append(out_row)
        return RingMatrix(self.ring, out)

    __matmul__ = __mul__

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.map(lambda x: other * x)
        return NotImplemented

    def lmul(self, x) -> "RingMatrix":
        """[x * a_ij]: multiply every entry by a ring element on the left."""
        return self.map(lambda a: x * a)

    def rmul(self, x) -> "RingMatrix":
        """[a_ij * x]."""
        return self.map(lambda a: a * x)

    def __pow__(self, k: int) -> "RingMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        out = RingMatrix.identity(self.ring, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RingMatrix):
            return self.rows == other.rows
        if isinstance(other, Scalar):
            return self == RingMatrix.scalar(self.ring, self.n, self.ring.from_rational(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __bool__(self):
        return any(bool(x) for row in self.rows for x in row)

    def is_zero(self) -> bool:
        return not self

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x

    def __repr__(self):
        return f"RingMatrix({self.ring!r}, {[list(r) for r in self.rows]!r})"

    def __str__(self):
        """One row per line in the text input format."""
        from .exprparse import format_matrix

        return format_matrix(self)


class MatrixRing(Ring):
    """M_n(base) as a ring in its own right.

    With ``upper=True`` it stands for the upper triangular subring U_n(base);
    the arithmetic is the same, the flag only restricts literals and random
    elements.
    """

    def __init__(self, n: int, base: Ring, upper: bool = False):
        self.n = n
        self.base = base
        self.upper = upper

    def __eq__(self, other):
        return (
            isinstance(other, MatrixRing)
            and (self.n, self.base, self.upper) == (other.n, other.base, other.upper)
        )

    def __hash__(self):
        return hash(("mat", self.n, self.base, self.upper))

    def __repr__(self):
        kind = "U" if self.upper else "M"
        return f"{kind}_{self.n}({self.base!r})"

    @property
    def zero(self):
        return RingMatrix.zeros(self.base, self.n)

    @property
    def one(self):
        return RingMatrix.identity(self.base, self.n)

    def from_rational(self, q):
        return RingMatrix.scalar(self.base, self.n, self.base.from_rational(q))

    def unit(self, i: int, j: int) -> RingMatrix:
        if self.upper and i > j:
            raise ValueError(f"E_{i + 1}{j + 1} is not upper triangular")
        return RingMatrix.unit(self.base, self.n, i, j)


def matrix_ring_embed(n: int, base: Ring) -> MatrixRing:
    return MatrixRing(n, base)


def _times_sign(x, s: int):
    return x if s > 0 else -x


def sdet(A: RingMatrix, formula: str = "alpha-beta"):
    """Symmetric determinant of ``A``.

    alpha-beta: sum over (alpha, beta) of sgn(alpha) sgn(beta) a[alpha(0), beta(0)] ... a[alpha(n-1), beta(n-1)]
    tau-rho:    sum over (tau, rho) of sgn(rho) a[tau(0), rho(tau(0))] ... a[tau(n-1), rho(tau(n-1))]
    """
    n = A.n
    perm.check_n(n)
    a = A.rows
    perms = perm.signed_perms(n)
    total = A.ring.zero
    if formula == "alpha-beta":
        for alpha, sa in perms:
            rows = [a[i] for i in alpha]
            for beta, sb in perms:
                term = rows[0][beta[0]]
                for t in range(1, n):
                    term = term * rows[t][beta[t]]
                total = total + _times_sign(term, sa * sb)
    elif formula == "tau-rho":
        for tau, _ in perms:
            for rho, sr in perms:
                i = tau[0]
                term = a[i][rho[i]]
                for t in range(1, n):
                    i = tau[t]
                    term = term * a[i][rho[i]]
                total = total + _times_sign(term, sr)
    else:
        raise ValueError(f"unknown sdet formula {formula!r}; expected one of {SDET_FORMULAS}")
    return total


def sadj(A: RingMatrix, formula: str = "alpha-beta") -> RingMatrix:
    """Symmetric adjoint A*.

    Entry (r, s) is the constrained double sum over permutations fixing
    s (alpha / tau) and sending s to r (beta / rho), with the s-th factor
    left out of each product.
    """
    n = A.n
    perm.check_n(n)
    ring = A.ring
    if n == 1:
        return RingMatrix(ring, [[ring.one]])
    if formula not in SDET_FORMULAS:
        raise ValueError(f"unknown sdet formula {formula!r}; expected one of {SDET_FORMULAS}")
    a = A.rows
    perms = perm.signed_perms(n)
    out = [[None] * n for _ in range(n)]
    for s in range(n):
        positions = [t for t in range(n) if t != s]
        fixing = [(p, sg) for p, sg in perms if p[s] == s]
        for r in range(n):
            sending = [(p, sg) for p, sg in perms if p[s] == r]
            total = ring.zero
            for p1, s1 in fixing:
                for p2, s2 in sending:
                    if formula == "alpha-beta":
                        factors = [a[p1[t]][p2[t]] for t in positions]
                        sgn = s1 * s2
                    else:
                        factors = [a[p1[t]][p2[p1[t]]] for t in positions]
                        sgn = s2
                    term = factors[0]
                    for f in factors[1:]:
                        term = term * f
                    total = total + _times_sign(term, sgn)
            out[r][s] = total
    return RingMatrix(ring, out)


def minor(A: RingMatrix, row: int, col: int) -> RingMatrix:
    """A with ``row`` and ``col`` deleted."""
    return RingMatrix(
        A.ring,
        [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(A.rows) if i != row],
    )


def sadj_minor(A: RingMatrix, r: int, s: int):
    """(-1)^(r+s) sdet of A with row s and column r deleted; equals sadj(A)[r, s]."""
    n = A.n
    if not (0 <= r < n and 0 <= s < n):
        raise IndexError(f"entry ({r}, {s}) outside a {n}x{n} matrix")
    if n == 1:
        return A.ring.one
    value = sdet(minor(A, s, r))
    return value if (r + s) % 2 == 0 else -value


def trace(A: RingMatrix):
    total = A.ring.zero
    for i in range(A.n):
        total = total + A.rows[i][i]
    return total


@dataclass(frozen=True)
class CommutatorParts:
    C: RingMatrix
    D: RingMatrix
    lam: Any


def commutator_parts(A: RingMatrix) -> CommutatorParts:
    """C = n A* A - sdet(A) I and D = n A A* - sdet(A) I."""
    n = A.n
    star = sadj(A)
    lam = sdet(A)
    lam_i = RingMatrix.scalar(A.ring, n, lam)
    C = (star * A) * n - lam_i
    D = (A * star) * n - lam_i
    return CommutatorParts(C, D, lam)


def as_rational_matrix(P) -> RingMatrix:
    if isinstance(P, RingMatrix):
        return P.map(to_rational, QQ)
    return RingMatrix(QQ, [[to_rational(x) for x in row] for row in P])


def rational_inverse(P) -> RingMatrix:
    """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
    P = as_rational_matrix(P)
    n = P.n
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(P.rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return RingMatrix(QQ, [row[n:] for row in aug])


def rational_det(P) -> Fraction:
    """Classical determinant over Q by elimination (commutative oracle only)."""
    P = as_rational_matrix(P)
    n = P.n
    m = [list(r) for r in P.rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def rational_adj(P) -> RingMatrix:
    """Classical adjugate over Q from cofactors (commutative oracle only)."""
    P = as_rational_matrix(P)
    n = P.n
    if n == 1:
        return RingMatrix(QQ, [[Fraction(1)]])
    return RingMatrix(
        QQ,
        [[(-1) ** (r + s) * rational_det(minor(P, s, r)) for s in range(n)] for r in range(n)],
    )


def conjugate(P, A: RingMatrix) -> RingMatrix:
    """P A P^-1 for an invertible rational matrix P."""
    P = as_rational_matrix(P)
    if P.n != A.n:
        raise ValueError(f"dimension mismatch: {P.n} vs {A.n}")
    Q = rational_inverse(P)
    n = A.n
    ring = A.ring
    a = A.rows

    def entry(i, j):
        acc = ring.zero
        for k in range(n):
            pik = P.rows[i][k]
            if not pik:
                continue
            for l in range(n):
                c = pik * Q.rows[l][j]
                if c:
                    acc = acc + a[k][l] * c
        return acc

    return RingMatrix(ring, [[entry(i, j) for j in range(n)] for i in range(n)])


def rational_charpoly(P) -> list[Fraction]:
    """Coefficients c_0..c_n of det(t I - P), by Faddeev-LeVerrier (commutative oracle only)."""
    P = as_rational_matrix(P)
    n = P.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = RingMatrix.zeros(QQ, n)
    ident = RingMatrix.identity(QQ, n)
    for k in range(1, n + 1):
        M = P * M + ident * coeffs[n - k + 1]
        coeffs[n - k] = -trace(P * M) / k
    return coeffs
