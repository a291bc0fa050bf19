"""
Exact linear algebra over the rationals
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from core.constants import MODULAR_RANK_PRIME
from core.enums import LinearStatus
from core.exceptions import DimensionMismatchError
from core.logging_config import get_logger
from utils.number_theory import common_denominator

logger = get_logger()

RationalVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RationalMatrix:
    """
    Dense matrix of exact rationals.

    Attributes:
        entries: Row tuples of Fractions (always reduced)
        n_cols: Number of columns, kept explicitly so empty matrices have a shape
    """
    entries: Tuple[Tuple[Fraction, ...], ...]
    n_cols: int

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        for i, row in enumerate(rows):
            if len(row) != self.n_cols:
                raise DimensionMismatchError(f"RationalMatrix row {i}", self.n_cols, len(row))
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n_cols: Optional[int] = None) -> "RationalMatrix":
        rows = [list(row) for row in rows]
        if n_cols is None:
            if not rows:
                raise ValueError("Cannot infer the column count of an empty matrix")
            n_cols = len(rows[0])
        return cls(tuple(tuple(row) for row in rows), n_cols)

    @classmethod
    def from_array(cls, array) -> "RationalMatrix":
        """From a 2-D integer array-like"""
        dense = np.asarray(array)
        if dense.ndim != 2:
            raise ValueError(f"Expected a 2-D matrix, got {dense.ndim} dimensions")
        return cls(tuple(tuple(Fraction(int(x)) for x in row) for row in dense.tolist()), dense.shape[1])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "RationalMatrix":
        return cls(tuple((Fraction(0),) * n_cols for _ in range(n_rows)), n_cols)

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    def __getitem__(self, position: Tuple[int, int]) -> Fraction:
        i, j = position
        return self.entries[i][j]

    def row(self, i: int) -> RationalVector:
        return self.entries[i]

    def column(self, j: int) -> RationalVector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(self.column(j) for j in range(self.n_cols)), self.n_rows)

    def select_rows(self, rows: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(tuple(self.entries[i] for i in rows), self.n_cols)

    def select_columns(self, cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(tuple(tuple(row[j] for j in cols) for row in self.entries), len(cols))

    def apply(self, vector: Sequence[Fraction]) -> RationalVector:
        """Matrix-vector product"""
        if len(vector) != self.n_cols:
            raise DimensionMismatchError("RationalMatrix.apply", self.n_cols, len(vector))
        vector = [Fraction(x) for x in vector]
        return tuple(sum((a * x for a, x in zip(row, vector) if a), Fraction(0)) for row in self.entries)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n_cols != other.n_rows:
            raise DimensionMismatchError("RationalMatrix @", self.n_cols, other.n_rows)
        columns = [other.column(j) for j in range(other.n_cols)]
        return RationalMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a), Fraction(0)) for col in columns)
            for row in self.entries
        ), other.n_cols)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def integer_rows(self) -> List[List[int]]:
        """Rows scaled independently to primitive-denominator integers (same row space)"""
        result = []
        for row in self.entries:
            scale = common_denominator(row)
            result.append([int(x * scale) for x in row])
        return result

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float).reshape(self.shape)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.n_rows}x{self.n_cols})"


MatrixLike = Union[RationalMatrix, np.ndarray]


@dataclass(frozen=True)
class RationalSolution:
    """
    Solution set of A·x = b over the rationals.

    Attributes:
        status: Inconsistent, Unique or Affine
        particular: One solution with every free variable set to zero
        kernel_basis: Basis of {v : A·v = 0}, one vector per free column
    """
    status: LinearStatus
    particular: Optional[RationalVector]
    kernel_basis: Tuple[RationalVector, ...] = ()

    def is_consistent(self) -> bool:
        return self.status is not LinearStatus.INCONSISTENT


@dataclass(frozen=True)
class RrefResult:
    """
    Reduced row echelon form R of A, with E·A = R when a transform was requested.

    Attributes:
        matrix: R
        pivots: Pivot column of each nonzero row of R
        transform: Invertible E with E·A = R, or None
    """
    matrix: RationalMatrix
    pivots: Tuple[int, ...]
    transform: Optional[RationalMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rref(A: MatrixLike, with_transform: bool = False) -> RrefResult:
    """
    Gauss-Jordan reduction with exact rationals.

    Pivots are chosen column by column, taking the lowest remaining row.

    Args:
        A: Matrix to reduce
        with_transform: Also accumulate E with E·A = R

    Returns:
        RrefResult: R, pivot columns and optional transform
    """
    A = _as_rational(A)
    m, n = A.shape
    rows = [list(row) for row in A.entries]
    transform = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)] if with_transform else None

    pivots: List[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        pivot = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        if transform is not None:
            transform[r], transform[pivot] = transform[pivot], transform[r]
        scale = rows[r][col]
        if scale != 1:
            rows[r] = [x / scale for x in rows[r]]
            if transform is not None:
                transform[r] = [x / scale for x in transform[r]]
        pivot_row = rows[r]
        for i in range(m):
            factor = rows[i][col]
            if i == r or factor == 0:
                continue
            rows[i] = [x - factor * y if y else x for x, y in zip(rows[i], pivot_row)]
            if transform is not None:
                transform[i] = [x - factor * y if y else x for x, y in zip(transform[i], transform[r])]
        pivots.append(col)
        r += 1

    return RrefResult(
        RationalMatrix(tuple(tuple(row) for row in rows), n),
        tuple(pivots),
        RationalMatrix(tuple(tuple(row) for row in transform), m) if transform is not None else None,
    )


def rational_rank(A: MatrixLike) -> int:
    """
    Exact rank of a rational matrix.

    The rank modulo a large prime is a lower bound for the rank over the
    rationals, so a full modular rank is already a certificate. Otherwise the
    rank is recomputed by fraction-free (Bareiss) elimination on integers.

    Example:
        >>> rational_rank(RationalMatrix.identity(3))
        3
    """
    rows = _integer_rows(A)
    m = len(rows) if not isinstance(rows, np.ndarray) else rows.shape[0]
    n = _n_cols(A)
    if m == 0 or n == 0:
        return 0
    modular = len(_modular_pivots(_reduce_mod_prime(rows)))
    if modular == min(m, n):
        return modular
    logger.debug(f"Modular rank {modular} < {min(m, n)}; running exact elimination")
    if m > n:
        rows = _gram(rows)
    elif isinstance(rows, np.ndarray):
        rows = [[int(x) for x in row] for row in rows.tolist()]
    return _bareiss_rank(rows)


def independent_rows(A: MatrixLike) -> Tuple[int, ...]:
    """
    Lexicographically first set of rows forming a basis of the row space.

    Example:
        >>> independent_rows(RationalMatrix.from_rows([[1, 1], [2, 2], [0, 1]]))
        (0, 2)
    """
    rows = _integer_rows(A)
    if isinstance(rows, np.ndarray):
        transposed = rows.T
    else:
        transposed = np.array(rows, dtype=object).T if rows else np.zeros((0, 0), dtype=np.int64)
    if transposed.size == 0:
        return ()
    # Rows independent modulo p are independent over Q
    candidates = tuple(_modular_pivots(_reduce_mod_prime(transposed)))
    if len(candidates) == rational_rank(A):
        return candidates
    logger.debug("Modular row basis is incomplete; falling back to exact elimination")
    return rref(_as_rational(A).transpose()).pivots


def rational_solve(A: MatrixLike, b: Sequence[Fraction]) -> RationalSolution:
    """
    Classify and solve A·x = b exactly.

    Args:
        A: Coefficient matrix
        b: Right-hand side, one entry per row

    Returns:
        RationalSolution: Inconsistent, Unique(x) or Affine(x, kernel basis)

    Raises:
        DimensionMismatchError: If len(b) != rows(A)

    Example:
        >>> rational_solve(RationalMatrix.from_rows([[1, 1], [1, 1]]), [1, 2]).status
        <LinearStatus.INCONSISTENT: 'inconsistent'>
    """
    A = _as_rational(A)
    if len(b) != A.n_rows:
        raise DimensionMismatchError("rational_solve", A.n_rows, len(b))
    n = A.n_cols
    augmented = RationalMatrix(tuple(row + (Fraction(x),) for row, x in zip(A.entries, b)), n + 1)
    reduced = rref(augmented)
    if n in reduced.pivots:
        return RationalSolution(LinearStatus.INCONSISTENT, None)
    return _solution_from_rref(reduced.matrix, reduced.pivots, n, rhs_column=n)


def rational_kernel(A: MatrixLike) -> Tuple[RationalVector, ...]:
    """Basis of {v : A·v = 0}, one vector per free column"""
    A = _as_rational(A)
    reduced = rref(A)
    return _solution_from_rref(reduced.matrix, reduced.pivots, A.n_cols, rhs_column=None).kernel_basis


def rational_inverse(A: MatrixLike) -> RationalMatrix:
    """
    Exact inverse of a square matrix.

    Raises:
        DimensionMismatchError: If A is not square
        ValueError: If A is singular
    """
    A = _as_rational(A)
    n = A.n_rows
    if A.n_cols != n:
        raise DimensionMismatchError("rational_inverse", n, A.n_cols)
    reduced = rref(A, with_transform=True)
    if reduced.rank != n:
        raise ValueError(f"Matrix is singular (rank {reduced.rank} < {n})")
    return reduced.transform


def _solution_from_rref(R: RationalMatrix, pivots: Sequence[int], n: int,
                        rhs_column: Optional[int]) -> RationalSolution:
    particular = [Fraction(0)] * n
    if rhs_column is not None:
        for i, col in enumerate(pivots):
            particular[col] = R[i, rhs_column]
    pivot_set = set(pivots)
    kernel = []
    for free in range(n):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * n
        vector[free] = Fraction(1)
        for i, col in enumerate(pivots):
            vector[col] = -R[i, free]
        kernel.append(tuple(vector))
    status = LinearStatus.UNIQUE if not kernel else LinearStatus.AFFINE
    return RationalSolution(status, tuple(particular), tuple(kernel))


def _as_rational(A: MatrixLike) -> RationalMatrix:
    if isinstance(A, RationalMatrix):
        return A
    return RationalMatrix.from_array(A)


def _n_cols(A: MatrixLike) -> int:
    return A.n_cols if isinstance(A, RationalMatrix) else np.asarray(A).shape[1]


def _integer_rows(A: MatrixLike):
    """Integer matrix with the same row space: an int64 array when possible"""
    if isinstance(A, np.ndarray):
        if A.dtype.kind not in "iub" and A.dtype != object:
            raise TypeError(f"Expected an integer array, got dtype {A.dtype}")
        return A
    return A.integer_rows()


def _reduce_mod_prime(rows) -> np.ndarray:
    p = MODULAR_RANK_PRIME
    if isinstance(rows, np.ndarray) and rows.dtype != object:
        return np.mod(rows.astype(np.int64), p)
    return np.array([[int(x) % p for x in row] for row in np.asarray(rows, dtype=object).tolist()],
                    dtype=np.int64).reshape(np.shape(rows))


def _modular_pivots(M: np.ndarray) -> List[int]:
    """
    Pivot columns of a matrix over GF(p), p = MODULAR_RANK_PRIME.

    Entries stay below 2^31, so every product fits in int64.
    """
    p = MODULAR_RANK_PRIME
    A = M.copy()
    m, n = A.shape
    pivots: List[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        nonzero = np.flatnonzero(A[r:, col])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        inverse = pow(int(A[r, col]), p - 2, p)
        A[r, col:] = (A[r, col:] * inverse) % p
        below = np.flatnonzero(A[r + 1:, col]) + r + 1
        if below.size:
            factors = A[below, col]
            A[below, col:] = (A[below, col:] - np.outer(factors, A[r, col:]) % p) % p
        pivots.append(col)
        r += 1
    return pivots


def _gram(rows) -> List[List[int]]:
    """AᵀA with exact integers; it has the same rank as A over the rationals"""
    if isinstance(rows, np.ndarray) and rows.dtype != object:
        small = rows.astype(np.int64)
        if np.abs(small).max(initial=0) ** 2 * small.shape[0] < 2 ** 62:
            return (small.T @ small).tolist()
    dense = np.array(rows, dtype=object)
    return [[int(x) for x in row] for row in (dense.T @ dense).tolist()]


def _bareiss_rank(rows: List[List[int]]) -> int:
    """Rank by fraction-free elimination; every division is exact"""
    rows = [list(row) for row in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    rank = 0
    previous = 1
    for col in range(n):
        if rank == m:
            break
        pivot = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, m):
            a = rows[i][col]
            row_i = rows[i]
            pivot_row = rows[rank]
            for j in range(col + 1, n):
                row_i[j] = (p * row_i[j] - a * pivot_row[j]) // previous
            row_i[col] = 0
        previous = p
        rank += 1
    return rank
