"""Permutations of {0, ..., n-1} and their signs.

A permutation is a tuple ``p`` with ``p[i]`` the image of ``i``.  Positions
are 0-based in code; the mathematical index i+1 maps to p[i]+1.
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache

DEFAULT_MAX_N = 6

Permutation = tuple


class CapError(ValueError):
    """Raised when a matrix dimension exceeds the permutation cap."""


def max_n() -> int:
    """Current cap on n; ``NCCH_MAX_N`` may raise it."""
    raw = os.environ.get("NCCH_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise CapError(f"NCCH_MAX_N must be an integer, got {raw!r}") from None
    return max(value, 1)


def check_n(n: int) -> None:
    cap = max_n()
    if not 1 <= n <= cap:
        raise CapError(f"n must be in 1..{cap}, got {n}; the double sum has (n!)^2 terms (set NCCH_MAX_N to raise the cap)")


def enumerate_perms(n: int) -> tuple[Permutation, ...]:
    """All n! permutations in lexicographic order of their image tuples."""
    check_n(n)
    return _perms(n)


@lru_cache(maxsize=None)
def _perms(n):
    return tuple(itertools.permutations(range(n)))


def sign(p: Permutation) -> int:
    """Parity sign, computed from the cycle decomposition."""
    seen = [False] * len(p)
    s = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[i] for i in q)


def identity(n: int) -> Permutation:
    return tuple(range(n))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


@lru_cache(maxsize=None)
def signed_perms(n: int) -> tuple[tuple[Permutation, int], ...]:
    return tuple((p, sign(p)) for p in _perms(n))
