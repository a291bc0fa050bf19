"""
Scalar value types: exact polar rationals and float observations
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from utils.helpers import normalize_turns, format_rational

# Exact rationals are Python fractions: always reduced, positive denominator
Rational = Fraction

HALF_TURN = Fraction(1, 2)


@dataclass(frozen=True)
class PolarScalar:
    """
    Exact nonzero scalar magnitude * e^(2πi * phase_turns).

    Attributes:
        magnitude: Positive rational magnitude
        phase_turns: Phase as a fraction of a full circle, reduced to [0, 1)
    """
    magnitude: Fraction
    phase_turns: Fraction = Fraction(0)

    def __post_init__(self):
        """Validate and normalize after initialization"""
        magnitude = Fraction(self.magnitude)
        if magnitude <= 0:
            raise ValueError(f"Magnitude must be positive, got {magnitude}")
        object.__setattr__(self, "magnitude", magnitude)
        object.__setattr__(self, "phase_turns", normalize_turns(Fraction(self.phase_turns)))

    @classmethod
    def from_signed(cls, value: Fraction) -> "PolarScalar":
        """
        Build a scalar from a signed nonzero rational.

        Example:
            >>> PolarScalar.from_signed(Fraction(-3, 2))
            PolarScalar(magnitude=Fraction(3, 2), phase_turns=Fraction(1, 2))
        """
        value = Fraction(value)
        if value == 0:
            raise ValueError("Scalar must be nonzero")
        return cls(abs(value), HALF_TURN if value < 0 else Fraction(0))

    def is_real(self) -> bool:
        return self.phase_turns in (0, HALF_TURN)

    def is_positive(self) -> bool:
        return self.phase_turns == 0

    def sign_bit(self) -> int:
        """1 for a negative real value, 0 for a positive one"""
        return 1 if self.phase_turns == HALF_TURN else 0

    def log_magnitude(self) -> float:
        return math.log(self.magnitude)

    def conjugate(self) -> "PolarScalar":
        return PolarScalar(self.magnitude, -self.phase_turns)

    def to_complex(self) -> complex:
        return float(self.magnitude) * cmath.exp(2j * math.pi * float(self.phase_turns))

    def __str__(self) -> str:
        if self.phase_turns == 0:
            return format_rational(self.magnitude)
        if self.phase_turns == HALF_TURN:
            return "-" + format_rational(self.magnitude)
        return f"{format_rational(self.magnitude)}@{format_rational(self.phase_turns)}"


@dataclass(frozen=True)
class FloatPolar:
    """
    Float-magnitude scalar magnitude * e^(2πi * phase_turns).

    Used for float-mode observations and for evaluated factor products. The
    phase may still be an exact Fraction; a float phase is reduced mod 1.

    Attributes:
        magnitude: Positive float magnitude
        phase_turns: Phase in [0, 1)
    """
    magnitude: float
    phase_turns: Union[Fraction, float] = Fraction(0)

    def __post_init__(self):
        """Validate and normalize after initialization"""
        magnitude = float(self.magnitude)
        if not math.isfinite(magnitude) or magnitude <= 0:
            raise ValueError(f"Magnitude must be positive and finite, got {self.magnitude}")
        object.__setattr__(self, "magnitude", magnitude)
        phase = self.phase_turns
        if isinstance(phase, (Fraction, int)):
            phase = normalize_turns(Fraction(phase))
        else:
            phase = float(phase) % 1.0
        object.__setattr__(self, "phase_turns", phase)

    def is_real(self) -> bool:
        return self.phase_turns in (0, HALF_TURN)

    def is_positive(self) -> bool:
        return self.phase_turns == 0

    def sign_bit(self) -> int:
        return 1 if self.phase_turns == HALF_TURN else 0

    def log_magnitude(self) -> float:
        return math.log(self.magnitude)

    def conjugate(self) -> "FloatPolar":
        if isinstance(self.phase_turns, Fraction):
            return FloatPolar(self.magnitude, -self.phase_turns)
        return FloatPolar(self.magnitude, -self.phase_turns % 1.0)

    def to_complex(self) -> complex:
        return self.magnitude * cmath.exp(2j * math.pi * float(self.phase_turns))


Scalar = Union[PolarScalar, FloatPolar]
