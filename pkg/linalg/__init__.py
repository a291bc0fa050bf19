"""
Exact linear algebra package for rankone
Contains GF(2), rational and integer (Smith) elimination
"""

from linalg.gf2 import Gf2Matrix, Gf2Solution, gf2_solve, gf2_rank, pack_bits, unpack_bits
from linalg.rational import (
    RationalMatrix,
    RationalSolution,
    RrefResult,
    rref,
    rational_rank,
    rational_solve,
    rational_kernel,
    rational_inverse,
    independent_rows,
)
from linalg.integer import SmithDecomposition, integer_smith, integer_left_kernel, verify_smith

__all__ = [
    'Gf2Matrix', 'Gf2Solution', 'gf2_solve', 'gf2_rank', 'pack_bits', 'unpack_bits',
    'RationalMatrix', 'RationalSolution', 'RrefResult', 'rref', 'rational_rank',
    'rational_solve', 'rational_kernel', 'rational_inverse', 'independent_rows',
    'SmithDecomposition', 'integer_smith', 'integer_left_kernel', 'verify_smith',
]
