"""
Integer normal forms: Smith decomposition and left-kernel bases
"""

from dataclasses import dataclass
from math import prod
from typing import List, Sequence, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from core.config import Config
from core.exceptions import DecompositionError
from core.logging_config import get_logger, log_performance

logger = get_logger()

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SmithDecomposition:
    """
    Smith decomposition U·A·V = diag(divisors) of an integer matrix A.

    Attributes:
        U: Unimodular m × m row transform
        V: Unimodular n × n column transform
        divisors: d_1 | d_2 | ... | d_r, padded with zeros to min(m, n)
    """
    U: IntMatrix
    V: IntMatrix
    divisors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d != 0)

    @property
    def n_rows(self) -> int:
        return len(self.U)

    @property
    def n_cols(self) -> int:
        return len(self.V)

    def nonzero_divisors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.divisors if d != 0)

    def torsion_order(self) -> int:
        """Product of the nonzero divisors"""
        return prod(self.nonzero_divisors())

    def diagonal(self) -> np.ndarray:
        """D as an m × n object array"""
        D = np.zeros((self.n_rows, self.n_cols), dtype=object)
        for i, d in enumerate(self.divisors):
            D[i, i] = d
        return D


@log_performance
def integer_smith(A) -> SmithDecomposition:
    """
    Smith decomposition of an integer matrix with unbounded integers.

    Args:
        A: 2-D integer array-like

    Returns:
        SmithDecomposition: Transforms and canonical divisors

    Raises:
        DecompositionError: If verification is enabled and a check fails

    Example:
        >>> integer_smith([[2, 0], [0, 3]]).divisors
        (1, 6)
    """
    rows = _int_rows(A)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    dM = DomainMatrix([[ZZ(x) for x in row] for row in rows], (m, n), ZZ)
    D, S, T = smith_normal_decomp(dM)
    D_rows = _from_domain(D)
    U = [list(row) for row in _from_domain(S)]
    V = _from_domain(T)

    divisors = []
    for i in range(min(m, n)):
        d = D_rows[i][i]
        if d < 0:
            # Flip the row transform so every divisor is nonnegative
            U[i] = [-x for x in U[i]]
            d = -d
        divisors.append(d)

    decomposition = SmithDecomposition(tuple(tuple(row) for row in U), V, tuple(divisors))
    logger.debug(f"Smith decomposition of {m}x{n} matrix: rank {decomposition.rank}, "
                 f"nontrivial divisors {[d for d in divisors if d > 1]}")
    if Config.VERIFY_DECOMPOSITIONS:
        verify_smith(rows, decomposition)
    return decomposition


def verify_smith(A, decomposition: SmithDecomposition) -> None:
    """
    Check U·A·V = D, unimodularity and the divisor chain exactly.

    Raises:
        DecompositionError: On the first failed check
    """
    matrix = np.array(_int_rows(A), dtype=object).reshape(decomposition.n_rows, decomposition.n_cols)
    U = np.array(decomposition.U, dtype=object).reshape(decomposition.n_rows, decomposition.n_rows)
    V = np.array(decomposition.V, dtype=object).reshape(decomposition.n_cols, decomposition.n_cols)
    if not np.array_equal(U.dot(matrix).dot(V), decomposition.diagonal()):
        raise DecompositionError("U·A·V differs from diag(divisors)")
    for name, T in (("U", decomposition.U), ("V", decomposition.V)):
        if T and abs(int(DomainMatrix([[ZZ(x) for x in row] for row in T], (len(T), len(T)), ZZ).det())) != 1:
            raise DecompositionError(f"{name} is not unimodular")
    nonzero = decomposition.nonzero_divisors()
    if any(d < 0 for d in decomposition.divisors):
        raise DecompositionError(f"negative divisor in {decomposition.divisors}")
    if decomposition.divisors[:len(nonzero)] != nonzero:
        raise DecompositionError(f"zero divisor before a nonzero one in {decomposition.divisors}")
    for left, right in zip(nonzero, nonzero[1:]):
        if right % left != 0:
            raise DecompositionError(f"divisor {left} does not divide {right}")


def integer_left_kernel(A) -> List[Tuple[int, ...]]:
    """
    Integer basis of {u : uᵀA = 0}.

    The rows of U beyond the rank of A span the left kernel over the
    integers because U is unimodular.

    Example:
        >>> integer_left_kernel([[1], [1]])
        [(1, -1)]
    """
    decomposition = integer_smith(A)
    return [_positive_leading(decomposition.U[i]) for i in range(decomposition.rank, decomposition.n_rows)]


def _positive_leading(vector: Sequence[int]) -> Tuple[int, ...]:
    """Negate a vector whose first nonzero entry is negative"""
    for x in vector:
        if x != 0:
            return tuple(vector) if x > 0 else tuple(-y for y in vector)
    return tuple(vector)


def _int_rows(A) -> List[List[int]]:
    if isinstance(A, np.ndarray):
        return [[int(x) for x in row] for row in A.tolist()]
    return [[int(x) for x in row] for row in A]


def _from_domain(M: DomainMatrix) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in M.to_list())
