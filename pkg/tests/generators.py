"""Seeded random elements for round-trip tests, one generator per ring kind."""
import random
from fractions import Fraction

from ncch.freealg import FreeAlgebra, NcPoly
from ncch.grassmann import GrassmannAlgebra, random_element
from ncch.matrix import MatrixRing, RingMatrix
from ncch.rings import QQ

RING_KINDS = ("free", "grassmann", "rational", "u2")


def _coeff(rng):
    c = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
    return c or Fraction(1)


def make_ring(kind):
    return {
        "free": FreeAlgebra(["a", "b", "x1"]),
        "grassmann": GrassmannAlgebra(6),
        "rational": QQ,
        "u2": MatrixRing(2, QQ, upper=True),
    }[kind]


def random_ring_element(kind, rng: random.Random):
    ring = make_ring(kind)
    if kind == "free":
        terms = {}
        for _ in range(rng.randint(0, 4)):
            word = tuple(rng.randrange(3) for _ in range(rng.randint(0, 3)))
            terms[word] = _coeff(rng)
        return NcPoly(ring, terms)
    if kind == "grassmann":
        g = random_element(6, 3, rng.randint(0, 5), rng)
        return g.scale(_coeff(rng))
    if kind == "rational":
        return _coeff(rng) * rng.randint(0, 1)
    x = [_coeff(rng) * rng.randint(0, 1) for _ in range(3)]
    return RingMatrix(QQ, [[x[0], x[1]], [Fraction(0), x[2]]])


def samples(kind, count=200, seed=0):
    rng = random.Random(f"roundtrip:{kind}:{seed}")
    ring = make_ring(kind)
    return ring, [random_ring_element(kind, rng) for _ in range(count)]
