import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncch.grassmann import (
    GrassmannAlgebra,
    GrassmannElem,
    blade_mul,
    blade_to_mask,
    chain_product,
    g_mul,
    grading_split,
    random_element,
)
from ncch.rings import commutator, left_normed


def sort_word(word):
    """Bubble sort a generator word, tracking transpositions; None if a generator repeats."""
    w = list(word)
    if len(set(w)) != len(w):
        return None
    sign = 1
    for i in range(len(w)):
        for j in range(len(w) - 1 - i):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                sign = -sign
    return sign, tuple(w)


def test_blade_mul_examples():
    assert blade_mul((2,), (1,)) == (-1, (1, 2))
    assert blade_mul((1,), (1,))[0] == 0
    assert blade_mul((1, 2), (3, 4)) == (1, (1, 2, 3, 4))


@given(st.sets(st.integers(1, 7)), st.sets(st.integers(1, 7)))
def test_blade_mul_matches_bubble_sort(s1, s2):
    b1, b2 = tuple(sorted(s1)), tuple(sorted(s2))
    expected = sort_word(b1 + b2)
    got = blade_mul(b1, b2)
    if expected is None:
        assert got[0] == 0
    else:
        assert got == expected


def test_blade_mul_rejects_unsorted():
    with pytest.raises(ValueError):
        blade_mul((2, 1), ())


def test_chain_product_d2():
    E = GrassmannAlgebra(4)
    v1, v2, v3, v4 = E.gens
    assert g_mul(commutator(v1, v2), commutator(v3, v4)) == E.blade((1, 2, 3, 4), 4)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_chain_product(d):
    E = GrassmannAlgebra(2 * d)
    value = chain_product(d)
    assert value == E.blade(tuple(range(1, 2 * d + 1)), 2**d)
    assert value.blades() == {tuple(range(1, 2 * d + 1)): Fraction(2**d)}


def test_unit_and_anticommutation():
    E = GrassmannAlgebra(5)
    g = random_element(5, 3, 6, 1)
    assert g_mul(E.one, g) == g
    g1 = random_element(5, 1, 3, 2).odd_part()
    h1 = random_element(5, 3, 6, 3).odd_part()
    assert g_mul(g1, h1) + g_mul(h1, g1) == E.zero


def test_grading_split_examples():
    E = GrassmannAlgebra(2)
    v1, v2 = E.gens
    assert grading_split(v1 + v1 * v2) == (v1 * v2, v1)
    assert grading_split(E.one) == (E.one, E.zero)
    assert grading_split(E.zero) == (E.zero, E.zero)


def test_random_element_determinism():
    assert random_element(4, 2, 3, 11) == random_element(4, 2, 3, 11)
    assert random_element(4, 2, 0, 11) == GrassmannAlgebra(4).zero
    g = random_element(4, 2, 3, 11)
    assert len(g.terms) == 3
    assert all(c in range(-3, 4) and c != 0 for c in g.terms.values())
    assert all(m.bit_count() <= 2 for m in g.terms)


def test_random_element_bad_params():
    with pytest.raises(ValueError):
        random_element(2, 3, 1, 0)
    with pytest.raises(ValueError):
        random_element(2, 2, 100, 0)


def test_rank_checks():
    with pytest.raises(IndexError):
        GrassmannAlgebra(2).gen(3)
    with pytest.raises(ValueError):
        GrassmannAlgebra(2).one * GrassmannAlgebra(3).one


seeds = st.integers(0, 10**6)


@given(seeds)
def test_even_part_central(seed):
    rng = random.Random(seed)
    g, h = random_element(8, 3, 5, rng), random_element(8, 3, 5, rng)
    assert g_mul(g.even_part(), h) == g_mul(h, g.even_part())


@given(seeds)
def test_odd_square_vanishes(seed):
    g = random_element(8, 3, 6, seed)
    assert g_mul(g.odd_part(), g.odd_part()) == GrassmannAlgebra(8).zero


@given(seeds)
def test_lie_nilpotent_index_two(seed):
    rng = random.Random(seed)
    g, h, f = (random_element(8, 2, 4, rng) for _ in range(3))
    assert left_normed([g, h, f]) == GrassmannAlgebra(8).zero


@given(seeds)
def test_engel_instance_and_proof_step(seed):
    rng = random.Random(seed)
    x, y1, y2, r1, r2 = (random_element(8, 2, 3, rng) for _ in range(5))
    assert commutator(y1, x) * commutator(y2, x) == GrassmannAlgebra(8).zero
    assert left_normed([r1 * r2, x, x]) == 2 * commutator(r1, x) * commutator(r2, x)


@given(seeds)
def test_associativity_and_distributivity(seed):
    rng = random.Random(seed)
    a, b, c = (random_element(6, 3, 4, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


def test_terms_by_mask():
    E = GrassmannAlgebra(3)
    g = GrassmannElem(E, {blade_to_mask((1, 3)): Fraction(2), 0: Fraction(0)})
    assert g.blades() == {(1, 3): 2}
