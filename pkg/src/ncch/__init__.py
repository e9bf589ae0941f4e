"""Symmetric determinants, adjoints and Cayley-Hamilton identities over noncommutative rings."""

from .freealg import FreeAlgebra, NcPoly, is_commutator_sum, substitute
from .grassmann import GrassmannAlgebra, GrassmannElem, chain_product, random_element
from .matrix import (
    CommutatorParts,
    MatrixRing,
    RingMatrix,
    commutator_parts,
    conjugate,
    rational_det,
    sadj,
    sadj_minor,
    sdet,
    trace,
)
from .rings import QQ, Ring, commutator, engel, left_normed, leibniz_expand
from .tpoly import (
    CharPolyData,
    TPoly,
    TPolyRing,
    ch_left_eval,
    ch_right_eval,
    char_matrix,
    poly_commutator_parts,
    sym_char_poly,
)
from .exprparse import ParseError, format_element, format_matrix, parse_element, parse_matrix

__version__ = "0.1.0"
