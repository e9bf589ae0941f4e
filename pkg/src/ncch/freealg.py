"""The free associative algebra Q<x1, ..., xg> with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rings import Ring, Scalar

Word = tuple  # tuple of generator ids, () is the unit monomial


def word_key(w: Word):
    """Canonical word order: length first, then lexicographic on ids."""
    return (len(w), w)


class FreeAlgebra(Ring):
    """Free algebra on named generators; generator ids follow declaration order."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and self.names == other.names

    def __hash__(self):
        return hash(("free", self.names))

    def __repr__(self):
        return f"FreeAlgebra({', '.join(self.names)})"

    @property
    def zero(self):
        return NcPoly(self, {})

    @property
    def one(self):
        return NcPoly(self, {(): Fraction(1)})

    def from_rational(self, q):
        return NcPoly(self, {(): Fraction(q)})

    def gen(self, name_or_id) -> "NcPoly":
        i = self.index[name_or_id] if isinstance(name_or_id, str) else name_or_id
        if not 0 <= i < len(self.names):
            raise IndexError(f"no generator with id {i}")
        return NcPoly(self, {(i,): Fraction(1)})

    @property
    def gens(self) -> tuple["NcPoly", ...]:
        return tuple(self.gen(i) for i in range(len(self.names)))

    def word(self, letters: Iterable) -> Word:
        """Turn names (or a string of one-letter names) into a word of ids."""
        return tuple(self.index[c] if isinstance(c, str) else c for c in letters)

    def monomial(self, letters: Iterable, coeff=1) -> "NcPoly":
        return NcPoly(self, {self.word(letters): Fraction(coeff)})


class NcPoly:
    """Finite Q-combination of words.  Immutable; zero coefficients are dropped."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: FreeAlgebra, terms: Mapping[Word, Fraction]):
        self.ring = ring
        self.terms = {w: Fraction(c) for w, c in terms.items() if c}
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, NcPoly):
            if other.ring != self.ring:
                raise ValueError(f"ambient mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, Scalar):
            return self.ring.from_rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return NcPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.ring, {w: -c for w, c in self.terms.items()})

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
        if not isinstance(other, NcPoly):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, q) -> "NcPoly":
        q = Fraction(q)
        if not q:
            return NcPoly(self.ring, {})
        return NcPoly(self.ring, {w: q * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, Scalar):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: word_key(wc[0]))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def __repr__(self):
        from .exprparse import format_element

        return f"NcPoly({format_element(self)!r})"

    def __str__(self):
        from .exprparse import format_element

        return format_element(self)


def nc_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    """Bilinear extension of word concatenation."""
    if p.ring != q.ring:
        raise ValueError(f"ambient mismatch: {p.ring!r} vs {q.ring!r}")
    out: dict = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return NcPoly(p.ring, out)


def substitute(p: NcPoly, assignment: Mapping, target: Ring):
    """Image of ``p`` under the unital homomorphism sending generators to ``assignment``.

    Keys of ``assignment`` may be generator ids or names.
    """
    images = {}
    for key, value in assignment.items():
        images[p.ring.index[key] if isinstance(key, str) else key] = value
    total = target.zero
    for w, c in p.sorted_terms():
        missing = [p.ring.names[i] for i in w if i not in images]
        if missing:
            raise KeyError(f"no assignment for generator(s) {sorted(set(missing))}")
        term = target.one
        for i in w:
            term = term * images[i]
        total = total + c * term
    return total


def cyclic_class_key(w: Word) -> Word:
    """Lexicographically least rotation of ``w``."""
    w = tuple(w)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def is_commutator_sum(p: NcPoly) -> bool:
    """True iff ``p`` lies in the Q-span of the commutators uv - vu.

    Rotations uv and vu of a word differ by a commutator, and every
    commutator of words is such a difference, so membership holds exactly
    when each rotation class has coefficient sum zero.
    """
    sums: dict = {}
    for w, c in p.terms.items():
        k = cyclic_class_key(w)
        sums[k] = sums.get(k, 0) + c
    return not any(sums.values())
