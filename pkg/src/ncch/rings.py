"""Ring interface, the rational field, and commutator identities.

Ring elements are plain Python objects supporting ``+``, ``-``, ``*``, unary
``-``, ``==`` and multiplication by ``int``/``Fraction`` on either side.  The
ring object (the "parent") supplies the constants and, for Grassmann-like
graded rings, the even/odd projections.
"""
from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational
from typing import Any, Sequence

Scalar = (int, Fraction)


def to_rational(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    raise TypeError(f"not an exact rational: {q!r}")


class Ring(ABC):
    """Parent object of a ring.

    Subclasses with a GL-grading set ``graded = True`` and override
    :meth:`even_part` / :meth:`odd_part`.
    """

    graded = False

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    def from_rational(self, q) -> Any:
        return to_rational(q) * self.one

    def is_zero(self, x) -> bool:
        return x == self.zero

    def even_part(self, x):
        raise TypeError(f"{self!r} has no GL-grading")

    def odd_part(self, x):
        raise TypeError(f"{self!r} has no GL-grading")

    def split(self, x):
        return self.even_part(x), self.odd_part(x)


class RationalField(Ring):
    """The rationals as a ring; elements are ``Fraction``.

    Trivially GL-graded with everything even.
    """

    graded = True

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_rational(self, q):
        return to_rational(q)

    def even_part(self, x):
        return x

    def odd_part(self, x):
        return Fraction(0)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def commutator(x, y):
    """[x, y] = xy - yx."""
    return x * y - y * x


def left_normed(xs: Sequence):
    """[x1, ..., xm] = [...[[x1, x2], x3], ..., xm]."""
    if not xs:
        raise ValueError("left_normed needs at least one element")
    acc = xs[0]
    for x in xs[1:]:
        acc = acc * x - x * acc
    return acc


def engel(x, y, k: int):
    """[x, y, ..., y] with y repeated k times."""
    if k < 1:
        raise ValueError(f"Engel index must be >= 1, got {k}")
    return left_normed([x] + [y] * k)


def ordered_set_partitions(m: int, s: int):
    """Yield every assignment of {0..m-1} to s labelled, possibly empty blocks.

    Each block is returned as an increasing tuple of indices.
    """
    for labels in itertools.product(range(s), repeat=m):
        blocks = [[] for _ in range(s)]
        for idx, lab in enumerate(labels):
            blocks[lab].append(idx)
        yield tuple(tuple(b) for b in blocks)


def leibniz_expand(rs: Sequence, xs: Sequence):
    """Right-hand side of the commutator Leibniz expansion.

    Sums ``[r1, H1] * ... * [rs, Hs]`` over ordered s-tuples of disjoint
    index sets covering ``range(len(xs))``; ``[r, H]`` is the left-normed
    commutator of ``r`` with the ``xs`` indexed by ``H`` in increasing order.
    The result equals ``left_normed([r1 * ... * rs, *xs])``.
    """
    if not rs:
        raise ValueError("need at least one factor")
    total = None
    for blocks in ordered_set_partitions(len(xs), len(rs)):
        term = None
        for r, block in zip(rs, blocks):
            factor = left_normed([r] + [xs[i] for i in block])
            term = factor if term is None else term * factor
        total = term if total is None else total + term
    return total
