"""
Observation patterns and partially observed tensors
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from core.enums import ValueMode
from core.exceptions import (
    DuplicateIndexError,
    EmptyPatternError,
    IndexOutOfRangeError,
    InexactPhaseError,
    NonRealValueError,
    TensorParseError,
)
from models.scalars import FloatPolar, PolarScalar, Scalar
from utils.helpers import snap_turns

# 1-based coordinates, one per mode
MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class ObservationPattern:
    """
    The set of observed multi-indices of a tensor.

    Indices are kept sorted lexicographically; this is the canonical row
    order of every design matrix built from the pattern.

    Attributes:
        dims: Size of each mode (at least two modes)
        indices: Observed multi-indices, 1-based, sorted
    """
    dims: Tuple[int, ...]
    indices: Tuple[MultiIndex, ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        """Validate the pattern after initialization"""
        dims = tuple(int(n) for n in self.dims)
        if len(dims) < 2:
            raise TensorParseError(self.source or "dims", f"a tensor needs at least 2 modes, got {len(dims)}")
        if any(n < 1 for n in dims):
            raise TensorParseError(self.source or "dims", f"dims must be positive, got {dims}")
        indices = [tuple(int(i) for i in index) for index in self.indices]
        if not indices:
            raise EmptyPatternError(self.source)
        for index in indices:
            if len(index) != len(dims) or any(not 1 <= i <= n for i, n in zip(index, dims)):
                raise IndexOutOfRangeError(index, dims)
        ordered = sorted(indices)
        for previous, current in zip(ordered, ordered[1:]):
            if previous == current:
                raise DuplicateIndexError(current)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "indices", tuple(ordered))

    @property
    def order(self) -> int:
        """Number of modes d"""
        return len(self.dims)

    def m(self) -> int:
        """Number of observations |Ω|"""
        return len(self.indices)

    @property
    def unknowns(self) -> int:
        """Unknowns of the log-linear system after pinning: Σn_k − (d−1)"""
        return sum(self.dims) - (self.order - 1)

    def row_of(self, index: Sequence[int]) -> int:
        """Position of an index in canonical order"""
        return self._positions()[tuple(index)]

    def _positions(self) -> Dict[MultiIndex, int]:
        cached = self.__dict__.get("_position_cache")
        if cached is None:
            cached = {index: row for row, index in enumerate(self.indices)}
            object.__setattr__(self, "_position_cache", cached)
        return cached

    def index_array(self) -> np.ndarray:
        """Observed indices as an m × d array of 0-based coordinates"""
        return np.asarray(self.indices, dtype=np.int64) - 1

    def permute(self, perm: Sequence[int]) -> "ObservationPattern":
        """
        Reorder the modes of the pattern.

        Args:
            perm: perm[k] is the old mode placed at new position k (0-based)
        """
        _check_permutation(perm, self.order)
        dims = tuple(self.dims[p] for p in perm)
        indices = tuple(tuple(index[p] for p in perm) for index in self.indices)
        return ObservationPattern(dims, indices, self.source)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[MultiIndex]:
        return iter(self.indices)

    def __contains__(self, index) -> bool:
        return tuple(index) in self._positions()

    def __repr__(self) -> str:
        return f"ObservationPattern(dims={self.dims}, m={self.m()})"


@dataclass(frozen=True)
class PartialTensor:
    """
    A partially observed tensor with nonzero observed values.

    Exact mode stores PolarScalar values; float mode stores FloatPolar values.

    Attributes:
        pattern: Observation pattern
        values: Observed values aligned with pattern.indices
        mode: Storage mode of the values
    """
    pattern: ObservationPattern
    values: Tuple[Scalar, ...]
    mode: ValueMode = ValueMode.EXACT

    def __post_init__(self):
        """Validate values against the pattern"""
        values = tuple(self.values)
        if len(values) != self.pattern.m():
            raise TensorParseError(self.pattern.source or "values",
                                   f"{len(values)} values for {self.pattern.m()} observations")
        expected = PolarScalar if self.mode is ValueMode.EXACT else FloatPolar
        for index, value in zip(self.pattern.indices, values):
            if not isinstance(value, expected):
                raise TensorParseError(str(index), f"{self.mode.value} tensor holds a {type(value).__name__}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_entries(cls, dims: Sequence[int], entries: Mapping[MultiIndex, Scalar],
                     source: str = "") -> "PartialTensor":
        """
        Build a tensor from an index -> value map.

        The mode is exact when every value is a PolarScalar. Mixed input is
        promoted to float mode.
        """
        pattern = ObservationPattern(tuple(dims), tuple(entries.keys()), source)
        if all(isinstance(value, PolarScalar) for value in entries.values()):
            mode = ValueMode.EXACT
            values = tuple(entries[index] for index in pattern.indices)
        else:
            mode = ValueMode.FLOAT
            values = tuple(_as_float(entries[index]) for index in pattern.indices)
        return cls(pattern, values, mode)

    @property
    def dims(self) -> Tuple[int, ...]:
        return self.pattern.dims

    @property
    def order(self) -> int:
        return self.pattern.order

    def m(self) -> int:
        return self.pattern.m()

    def is_exact(self) -> bool:
        return self.mode is ValueMode.EXACT

    def value(self, index: Sequence[int]) -> Scalar:
        """Observed value at a 1-based index"""
        return self.values[self.pattern.row_of(index)]

    def items(self) -> Iterator[Tuple[MultiIndex, Scalar]]:
        return zip(self.pattern.indices, self.values)

    def as_dict(self) -> Dict[MultiIndex, Scalar]:
        return dict(self.items())

    def is_real(self) -> bool:
        return all(value.is_real() for value in self.values)

    def is_positive(self) -> bool:
        return all(value.is_positive() for value in self.values)

    def require_real(self) -> None:
        """
        Raises:
            NonRealValueError: If some observation is not a real number
        """
        for index, value in self.items():
            if not value.is_real():
                raise NonRealValueError(index, value.phase_turns)

    def exact_magnitudes(self) -> List[Fraction]:
        """Exact observed magnitudes (exact mode only)"""
        if not self.is_exact():
            raise TypeError("exact magnitudes are only available in exact mode")
        return [value.magnitude for value in self.values]

    def log_magnitudes(self) -> np.ndarray:
        """q_e = log|Q_e| in canonical row order"""
        return np.array([value.log_magnitude() for value in self.values], dtype=float)

    def phase_targets(self) -> List[Fraction]:
        """
        Exact phases t_e in turns, in canonical row order.

        Float phases are snapped to the nearest small-denominator rational.

        Raises:
            InexactPhaseError: If a float phase is not close to a rational
        """
        targets = []
        for index, value in self.items():
            phase = value.phase_turns
            if isinstance(phase, float):
                try:
                    phase = snap_turns(phase)
                except ValueError:
                    raise InexactPhaseError(index, phase)
            targets.append(Fraction(phase))
        return targets

    def sign_bits(self) -> List[int]:
        """c_e = 1 for negative observations, 0 for positive ones"""
        self.require_real()
        return [value.sign_bit() for value in self.values]

    def conjugate(self) -> "PartialTensor":
        """Tensor with every observed value complex-conjugated"""
        return PartialTensor(self.pattern, tuple(value.conjugate() for value in self.values), self.mode)

    def permute_modes(self, perm: Sequence[int]) -> "PartialTensor":
        """
        Reorder tensor modes.

        Args:
            perm: perm[k] is the old mode placed at new position k (0-based)
        """
        _check_permutation(perm, self.order)
        entries = {tuple(index[p] for p in perm): value for index, value in self.items()}
        pattern = self.pattern.permute(perm)
        return PartialTensor(pattern, tuple(entries[index] for index in pattern.indices), self.mode)

    def with_values(self, values: Sequence[Scalar], mode: Optional[ValueMode] = None) -> "PartialTensor":
        """Same pattern, new values in canonical order"""
        return PartialTensor(self.pattern, tuple(values), mode or self.mode)

    def __repr__(self) -> str:
        return f"PartialTensor(dims={self.dims}, m={self.m()}, mode={self.mode.value})"


def _as_float(value: Scalar) -> FloatPolar:
    if isinstance(value, FloatPolar):
        return value
    return FloatPolar(float(value.magnitude), value.phase_turns)


def _check_permutation(perm: Sequence[int], order: int) -> None:
    if sorted(perm) != list(range(order)):
        raise ValueError(f"{list(perm)} is not a permutation of {order} modes")
