"""
Linear algebra over GF(2) with bit-packed rows
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple, Union

import numpy as np

from core.enums import Gf2Status
from core.exceptions import DimensionMismatchError

BitVector = Tuple[int, ...]


def pack_bits(bits: Sequence[int]) -> int:
    """
    Pack a bit list into an integer; element 0 is the least-significant bit.

    Example:
        >>> pack_bits([1, 0, 1])
        5
    """
    out = 0
    for position, bit in enumerate(bits):
        out |= (int(bit) & 1) << position
    return out


def unpack_bits(packed: int, length: int) -> BitVector:
    """Unpack an integer into `length` bits, least-significant first"""
    return tuple((packed >> position) & 1 for position in range(length))


@dataclass(frozen=True)
class Gf2Matrix:
    """
    Bit-packed matrix over GF(2).

    Row i is stored as an integer whose bit j is the entry (i, j).

    Attributes:
        rows: Packed rows
        n_rows: Number of rows
        n_cols: Number of columns
    """
    rows: Tuple[int, ...]
    n_rows: int
    n_cols: int

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError(f"GF(2) matrix dimensions must be positive, got {self.n_rows}x{self.n_cols}")
        if len(self.rows) != self.n_rows:
            raise DimensionMismatchError("Gf2Matrix rows", self.n_rows, len(self.rows))
        limit = 1 << self.n_cols
        if any(row < 0 or row >= limit for row in self.rows):
            raise ValueError(f"GF(2) row has bits beyond column {self.n_cols}")

    @classmethod
    def from_dense(cls, matrix) -> "Gf2Matrix":
        """Build from a 2-D array-like of integers, reduced mod 2"""
        dense = np.asarray(matrix, dtype=np.int64) & 1
        if dense.ndim != 2:
            raise ValueError(f"Expected a 2-D matrix, got {dense.ndim} dimensions")
        n_rows, n_cols = dense.shape
        return cls(tuple(pack_bits(row) for row in dense.tolist()), n_rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(tuple(1 << i for i in range(n)), n, n)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    def get(self, i: int, j: int) -> int:
        """Entry (i, j), 0-based"""
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(f"({i}, {j}) outside {self.n_rows}x{self.n_cols}")
        return (self.rows[i] >> j) & 1

    def to_dense(self) -> np.ndarray:
        return np.array([unpack_bits(row, self.n_cols) for row in self.rows], dtype=np.int64)

    def multiply(self, x: Union[int, Sequence[int]]) -> BitVector:
        """A·x over GF(2)"""
        packed = _as_packed(x, self.n_cols, "Gf2Matrix.multiply")
        return tuple(bin(row & packed).count("1") & 1 for row in self.rows)

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.n_rows}x{self.n_cols})"


@dataclass(frozen=True)
class Gf2Solution:
    """
    Solution set of A·x = b over GF(2).

    Attributes:
        status: Inconsistent, Unique or Affine
        particular: One solution (all zeros when inconsistent)
        kernel_basis: Basis of {v : A·v = 0}; empty iff the solution is unique
    """
    status: Gf2Status
    particular: BitVector
    kernel_basis: Tuple[BitVector, ...]

    @property
    def kernel_dimension(self) -> int:
        return len(self.kernel_basis)

    def is_consistent(self) -> bool:
        return self.status is not Gf2Status.INCONSISTENT

    def count(self) -> int:
        """Number of solutions, 2^k when consistent"""
        if not self.is_consistent():
            return 0
        return 1 << self.kernel_dimension

    def iter_solutions(self) -> Iterator[BitVector]:
        """
        All solutions: particular + every kernel combination.

        Combinations are visited in binary counting order over the basis.
        """
        if not self.is_consistent():
            return
        n = len(self.particular)
        base = pack_bits(self.particular)
        basis = [pack_bits(v) for v in self.kernel_basis]
        for choice in itertools.product((0, 1), repeat=len(basis)):
            x = base
            for bit, vector in zip(choice, basis):
                if bit:
                    x ^= vector
            yield unpack_bits(x, n)


def gf2_solve(A: Gf2Matrix, b: Union[int, Sequence[int]]) -> Gf2Solution:
    """
    Solve A·x = b over GF(2) by reduced row echelon elimination.

    Columns are processed left to right and the pivot is the lowest
    remaining row with a 1 in the column, so results are deterministic.

    Args:
        A: Coefficient matrix
        b: Right-hand side, a bit sequence of length rows(A) or a packed int

    Returns:
        Gf2Solution: Status, particular solution and kernel basis

    Raises:
        DimensionMismatchError: If len(b) != rows(A)

    Example:
        >>> gf2_solve(Gf2Matrix.from_dense([[1, 1]]), [1]).kernel_basis
        ((1, 1),)
    """
    n = A.n_cols
    rhs = _as_packed(b, A.n_rows, "gf2_solve")
    augmented_bit = 1 << n
    rows: List[int] = [row | (augmented_bit if (rhs >> i) & 1 else 0) for i, row in enumerate(A.rows)]

    pivot_cols: List[int] = []
    rank = 0
    for col in range(n):
        mask = 1 << col
        pivot = next((i for i in range(rank, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_row = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= pivot_row
        pivot_cols.append(col)
        rank += 1
        if rank == len(rows):
            break

    if any(rows[i] & augmented_bit for i in range(rank, len(rows))):
        return Gf2Solution(Gf2Status.INCONSISTENT, (0,) * n, ())

    particular = 0
    for i, col in enumerate(pivot_cols):
        if rows[i] & augmented_bit:
            particular |= 1 << col

    pivot_set = set(pivot_cols)
    kernel = []
    for free in range(n):
        if free in pivot_set:
            continue
        vector = 1 << free
        for i, col in enumerate(pivot_cols):
            if (rows[i] >> free) & 1:
                vector |= 1 << col
        kernel.append(unpack_bits(vector, n))

    status = Gf2Status.UNIQUE if not kernel else Gf2Status.AFFINE
    return Gf2Solution(status, unpack_bits(particular, n), tuple(kernel))


def gf2_rank(A: Gf2Matrix) -> int:
    """Rank of A over GF(2)"""
    return A.n_cols - gf2_solve(A, 0).kernel_dimension


def _as_packed(x: Union[int, Sequence[int]], length: int, operation: str) -> int:
    if isinstance(x, (int, np.integer)):
        packed = int(x)
        if packed < 0 or packed >> length:
            raise DimensionMismatchError(operation, length, packed.bit_length())
        return packed
    if len(x) != length:
        raise DimensionMismatchError(operation, length, len(x))
    return pack_bits(x)
