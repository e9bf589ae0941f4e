from fractions import Fraction

import pytest
from hypothesis import settings

from ncch.freealg import FreeAlgebra
from ncch.grassmann import GrassmannAlgebra
from ncch.matrix import RingMatrix

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def abcd():
    return FreeAlgebra("abcd")


@pytest.fixture
def generic2(abcd):
    a, b, c, d = abcd.gens
    return RingMatrix(abcd, [[a, b], [c, d]])


@pytest.fixture
def E4():
    return GrassmannAlgebra(4)


def frac_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


@pytest.fixture
def corrupted_sdet(monkeypatch):
    """Replace the sdet kernel by one that is off by one, the way a sign slip would be."""
    import ncch.matrix as ncmatrix

    real = ncmatrix.sdet

    def broken(A, formula="alpha-beta"):
        return real(A, formula) + A.ring.one

    monkeypatch.setattr(ncmatrix, "sdet", broken)
    return real


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
