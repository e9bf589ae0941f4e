"""Finite-rank exterior algebra E(k) over Q with its even/odd grading.

Generators are ``v1 .. vk``.  Internally a blade is a bitmask (bit i-1 set
for v_i); the public :func:`blade_mul` works on increasing index tuples.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .rings import Ring, Scalar

Blade = tuple  # strictly increasing generator indices, 1-based


def blade_to_mask(blade: Blade) -> int:
    mask = 0
    for i in blade:
        mask |= 1 << (i - 1)
    return mask


def mask_to_blade(mask: int) -> Blade:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def mask_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation a.b; 0 if they share a generator."""
    if a & b:
        return 0
    swaps = 0
    while b:
        low = b & -b
        swaps += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if swaps & 1 else 1


def blade_mul(b1: Blade, b2: Blade) -> tuple[int, Blade]:
    """Product of two blades as (sign, blade); sign 0 means the product vanishes."""
    if list(b1) != sorted(set(b1)) or list(b2) != sorted(set(b2)):
        raise ValueError("blades must be strictly increasing")
    m1, m2 = blade_to_mask(b1), blade_to_mask(b2)
    s = mask_sign(m1, m2)
    if s == 0:
        return 0, ()
    return s, mask_to_blade(m1 | m2)


def blade_order(mask: int):
    """Print order: blade length, then index tuple."""
    return (mask.bit_count(), mask_to_blade(mask))


class GrassmannAlgebra(Ring):
    graded = True

    def __init__(self, rank: int):
        if rank < 0:
            raise ValueError(f"rank must be >= 0, got {rank}")
        self.rank = rank

    def __eq__(self, other):
        return isinstance(other, GrassmannAlgebra) and self.rank == other.rank

    def __hash__(self):
        return hash(("grassmann", self.rank))

    def __repr__(self):
        return f"GrassmannAlgebra({self.rank})"

    @property
    def zero(self):
        return GrassmannElem(self, {})

    @property
    def one(self):
        return GrassmannElem(self, {0: Fraction(1)})

    def from_rational(self, q):
        return GrassmannElem(self, {0: Fraction(q)})

    def gen(self, i: int) -> "GrassmannElem":
        if not 1 <= i <= self.rank:
            raise IndexError(f"v{i} is outside E({self.rank})")
        return GrassmannElem(self, {1 << (i - 1): Fraction(1)})

    @property
    def gens(self):
        return tuple(self.gen(i) for i in range(1, self.rank + 1))

    def blade(self, indices: Blade, coeff=1) -> "GrassmannElem":
        """Monomial v_{i1} ... v_{ij} in the written order (sign applied)."""
        out = self.from_rational(coeff)
        for i in indices:
            out = out * self.gen(i)
        return out

    def even_part(self, g):
        return g.even_part()

    def odd_part(self, g):
        return g.odd_part()


class GrassmannElem:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: GrassmannAlgebra, terms: Mapping[int, Fraction]):
        self.ring = ring
        self.terms = {m: Fraction(c) for m, c in terms.items() if c}
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, GrassmannElem):
            if other.ring != self.ring:
                raise ValueError(f"rank mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, Scalar):
            return self.ring.from_rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return GrassmannElem(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElem(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if not isinstance(other, GrassmannElem):
            return NotImplemented
        return g_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, q):
        q = Fraction(q)
        return GrassmannElem(self.ring, {m: q * c for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, GrassmannElem):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, Scalar):
            return self.terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def even_part(self):
        return GrassmannElem(self.ring, {m: c for m, c in self.terms.items() if m.bit_count() % 2 == 0})

    def odd_part(self):
        return GrassmannElem(self.ring, {m: c for m, c in self.terms.items() if m.bit_count() % 2})

    def blades(self) -> dict:
        """Terms keyed by index tuples instead of bitmasks."""
        return {mask_to_blade(m): c for m, c in self.terms.items()}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: blade_order(mc[0]))

    def __repr__(self):
        from .exprparse import format_element

        return f"GrassmannElem({format_element(self)!r})"

    def __str__(self):
        from .exprparse import format_element

        return format_element(self)


def g_mul(g: GrassmannElem, h: GrassmannElem) -> GrassmannElem:
    if g.ring != h.ring:
        raise ValueError(f"rank mismatch: {g.ring!r} vs {h.ring!r}")
    out: dict = {}
    for m1, c1 in g.terms.items():
        for m2, c2 in h.terms.items():
            if m1 & m2:
                continue
            s = mask_sign(m1, m2)
            m = m1 | m2
            out[m] = out.get(m, 0) + (c1 * c2 if s > 0 else -(c1 * c2))
    return GrassmannElem(g.ring, out)


def grading_split(g: GrassmannElem) -> tuple[GrassmannElem, GrassmannElem]:
    return g.even_part(), g.odd_part()


def admissible_blades(rank: int, max_blade_len: int) -> list[int]:
    out = []
    for length in range(0, min(rank, max_blade_len) + 1):
        for combo in itertools.combinations(range(1, rank + 1), length):
            out.append(blade_to_mask(combo))
    return out


COEFF_RANGE = [c for c in range(-3, 4) if c]


def random_element(rank: int, max_blade_len: int, terms: int, seed) -> GrassmannElem:
    """Seeded random element: ``terms`` distinct blades, coefficients in [-3, 3] minus 0.

    ``seed`` is an int or a ``random.Random`` (which is advanced).
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    alg = GrassmannAlgebra(rank)
    if max_blade_len < 0 or max_blade_len > rank:
        raise ValueError(f"max blade length must lie in 0..{rank}")
    pool = admissible_blades(rank, max_blade_len)
    if terms < 0 or terms > len(pool):
        raise ValueError(f"terms must lie in 0..{len(pool)}")
    chosen = rng.sample(pool, terms)
    return GrassmannElem(alg, {m: Fraction(rng.choice(COEFF_RANGE)) for m in chosen})


def chain_product(d: int) -> GrassmannElem:
    """[v1, v2] [v3, v4] ... [v_{2d-1}, v_{2d}] in E(2d)."""
    alg = GrassmannAlgebra(2 * d)
    out = alg.one
    for j in range(d):
        x, y = alg.gen(2 * j + 1), alg.gen(2 * j + 2)
        out = out * (x * y - y * x)
    return out
