"""
Rank-one factor vectors
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Optional, Sequence, Tuple

from models.scalars import FloatPolar
from models.tensor import MultiIndex
from utils.helpers import normalize_turns


@dataclass(frozen=True)
class FactorEntry:
    """
    One component of a factor vector.

    Attributes:
        magnitude: Positive float magnitude
        phase_turns: Exact phase in [0, 1)
        exponents: Optional exact form: magnitude = prod(|Q_e| ** exponents[e])
    """
    magnitude: float
    phase_turns: Fraction = Fraction(0)
    exponents: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        magnitude = float(self.magnitude)
        if not math.isfinite(magnitude) or magnitude <= 0:
            raise ValueError(f"Factor components must be nonzero, got magnitude {self.magnitude}")
        object.__setattr__(self, "magnitude", magnitude)
        object.__setattr__(self, "phase_turns", normalize_turns(Fraction(self.phase_turns)))
        if self.exponents is not None:
            object.__setattr__(self, "exponents", tuple(Fraction(r) for r in self.exponents))

    def is_pinned_value(self) -> bool:
        """True for the exact value 1"""
        return self.magnitude == 1.0 and self.phase_turns == 0

    def conjugate(self) -> "FactorEntry":
        return FactorEntry(self.magnitude, -self.phase_turns, self.exponents)


@dataclass(frozen=True)
class RankOneFactors:
    """
    Factor vectors a ∘ b ∘ c ∘ ... of a rank-one tensor in the standard gauge.

    The first component of every mode except the last is exactly 1; the
    overall scale lives in the last mode.

    Attributes:
        vectors: One tuple of FactorEntry per mode
    """
    vectors: Tuple[Tuple[FactorEntry, ...], ...]

    def __post_init__(self):
        """Validate the gauge normalization"""
        vectors = tuple(tuple(vector) for vector in self.vectors)
        if len(vectors) < 2:
            raise ValueError(f"Rank-one factors need at least 2 modes, got {len(vectors)}")
        for k, vector in enumerate(vectors):
            if not vector:
                raise ValueError(f"Factor vector {k + 1} is empty")
            if k < len(vectors) - 1 and not vector[0].is_pinned_value():
                raise ValueError(f"First component of factor vector {k + 1} must be exactly 1")
        object.__setattr__(self, "vectors", vectors)

    @classmethod
    def from_components(cls, magnitudes: Sequence[Sequence[float]],
                        phases: Optional[Sequence[Sequence[Fraction]]] = None) -> "RankOneFactors":
        """
        Build gauge-normalized factors from arbitrary nonzero components.

        The first component of modes 1..d−1 is scaled to 1 (magnitude and
        phase) and the compensating scale is moved into the last mode, so
        the represented tensor is unchanged.

        Example:
            >>> f = RankOneFactors.from_components([[2, 4], [1, 3], [5, 7]])
            >>> f.magnitudes()
            ((1.0, 2.0), (1.0, 3.0), (10.0, 14.0))
        """
        if phases is None:
            phases = [[Fraction(0)] * len(vector) for vector in magnitudes]
        magnitudes = [[float(x) for x in vector] for vector in magnitudes]
        phases = [[Fraction(p) for p in vector] for vector in phases]
        scale = 1.0
        turn = Fraction(0)
        for k in range(len(magnitudes) - 1):
            first_mag, first_phase = magnitudes[k][0], phases[k][0]
            magnitudes[k] = [x / first_mag for x in magnitudes[k]]
            phases[k] = [p - first_phase for p in phases[k]]
            magnitudes[k][0] = 1.0
            scale *= first_mag
            turn += first_phase
        magnitudes[-1] = [x * scale for x in magnitudes[-1]]
        phases[-1] = [p + turn for p in phases[-1]]
        return cls(tuple(
            tuple(FactorEntry(x, p) for x, p in zip(mags, turns))
            for mags, turns in zip(magnitudes, phases)
        ))

    @property
    def order(self) -> int:
        return len(self.vectors)

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(len(vector) for vector in self.vectors)

    def entry(self, mode: int, index: int) -> FactorEntry:
        """Component `index` (1-based) of factor vector `mode` (1-based)"""
        return self.vectors[mode - 1][index - 1]

    def magnitudes(self) -> Tuple[Tuple[float, ...], ...]:
        return tuple(tuple(e.magnitude for e in vector) for vector in self.vectors)

    def phases(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(e.phase_turns for e in vector) for vector in self.vectors)

    def phase_key(self) -> Tuple[Fraction, ...]:
        """Phases flattened mode-major"""
        return tuple(p for vector in self.phases() for p in vector)

    def sort_key(self) -> Tuple:
        """Canonical order: phases mode-major, then magnitudes"""
        return (self.phase_key(), tuple(x for vector in self.magnitudes() for x in vector))

    def is_real(self) -> bool:
        return all(p in (0, Fraction(1, 2)) for p in self.phase_key())

    def evaluate(self, index: Sequence[int]) -> FloatPolar:
        return evaluate(self, index)

    def conjugate(self) -> "RankOneFactors":
        return RankOneFactors(tuple(tuple(e.conjugate() for e in vector) for vector in self.vectors))

    def with_phases(self, phases: Sequence[Sequence[Fraction]]) -> "RankOneFactors":
        """Same magnitudes, new exact phases"""
        return RankOneFactors(tuple(
            tuple(FactorEntry(e.magnitude, p, e.exponents) for e, p in zip(vector, turns))
            for vector, turns in zip(self.vectors, phases)
        ))

    def complete(self, dims: Optional[Sequence[int]] = None) -> Dict[MultiIndex, FloatPolar]:
        """
        The full tensor represented by these factors.

        Args:
            dims: Expected dims; defaults to the factor lengths

        Returns:
            dict: Every 1-based multi-index mapped to its value
        """
        if dims is not None and tuple(dims) != self.dims:
            raise ValueError(f"Factors have dims {self.dims}, requested {tuple(dims)}")
        return {index: evaluate(self, index) for index in iter_indices(self.dims)}

    def __repr__(self) -> str:
        return f"RankOneFactors(dims={self.dims})"


def evaluate(factors: RankOneFactors, index: Sequence[int]) -> FloatPolar:
    """
    Value of the rank-one tensor at a multi-index.

    Phases add exactly mod 1; magnitudes multiply in floating point.

    Args:
        factors: Rank-one factors
        index: 1-based multi-index within dims

    Returns:
        FloatPolar: Product of the d component values
    """
    magnitude = 1.0
    phase = Fraction(0)
    for vector, i in zip(factors.vectors, index):
        component = vector[i - 1]
        magnitude *= component.magnitude
        phase += component.phase_turns
    return FloatPolar(magnitude, phase)


def iter_indices(dims: Sequence[int]) -> Iterator[MultiIndex]:
    """All 1-based multi-indices of a tensor in lexicographic order"""
    return itertools.product(*(range(1, n + 1) for n in dims))
