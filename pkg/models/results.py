"""
Result models of the real and complex completion analyses
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union

import numpy as np

from core.constants import INFINITE_LABEL
from core.enums import ComplexStatus, RealStatus
from linalg.gf2 import Gf2Matrix, Gf2Solution
from models.factors import RankOneFactors
from models.solutions import SolutionSet

Count = Union[int, str]
TurnsVector = Tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class MagnitudeSolution:
    """
    Outcome of the log-magnitude system x_i + y_j + z_k = log|Q_ijk|.

    Attributes:
        consistent: Whether the system has a solution
        method: How consistency was decided ("unit", "full-rank", "certificate",
            "augmented-rank" or "least-squares")
        log_values: One log-magnitude per unknown (free unknowns set to 0)
        exponents: Exact form of each unknown as exponents over the observations
        kernel_basis: Directions of the solution family when condition (A) fails
        certificate: Violated left-kernel vector when inconsistent
        residual: Max absolute log residual (float mode)
    """
    consistent: bool
    method: str
    log_values: Optional[np.ndarray] = None
    exponents: Optional[Tuple[TurnsVector, ...]] = None
    kernel_basis: Tuple[TurnsVector, ...] = ()
    certificate: Optional[Tuple[int, ...]] = None
    residual: float = 0.0

    @property
    def family_dimension(self) -> int:
        return len(self.kernel_basis)


@dataclass(frozen=True)
class SignSystem:
    """
    GF(2) system ε_i + ν_j + η_k = c_ijk for the signs of a real completion.

    Attributes:
        matrix: Design matrix reduced mod 2
        c: c_e = 1 for a negative observation
    """
    matrix: Gf2Matrix
    c: Tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.matrix.n_rows:
            raise ValueError(f"Sign vector has {len(self.c)} bits for {self.matrix.n_rows} rows")


@dataclass(frozen=True, eq=False)
class RealSolveResult:
    """
    Existence and uniqueness of real rank-one completions.

    Attributes:
        status: Which subsystem failed, or SOLUTIONS
        solutions: Listed solutions in canonical order
        count: Number of real solutions, or "infinite"
        magnitude: Log-magnitude outcome
        signs: GF(2) outcome (None when the magnitudes already failed)
    """
    status: RealStatus
    solutions: SolutionSet
    count: Count
    magnitude: MagnitudeSolution
    signs: Optional[Gf2Solution] = None

    def __post_init__(self):
        if self.status is RealStatus.SOLUTIONS and self.count != INFINITE_LABEL:
            if self.count < 1 or self.count & (self.count - 1):
                raise ValueError(f"A finite real solution count must be a power of two, got {self.count}")

    @property
    def kernel_dimension(self) -> Optional[int]:
        return self.signs.kernel_dimension if self.signs is not None and self.signs.is_consistent() else None

    def has_solutions(self) -> bool:
        return self.status is RealStatus.SOLUTIONS

    def is_unique(self) -> bool:
        return self.count == 1


@dataclass(frozen=True)
class PhaseSystem:
    """
    Congruence system A·φ ≡ t (mod 1) for the phases of a complex completion.

    Attributes:
        matrix: Design matrix rows as integer tuples
        targets: Observed phases in turns, each in [0, 1)
    """
    matrix: Tuple[Tuple[int, ...], ...]
    targets: TurnsVector

    def __post_init__(self):
        if len(self.targets) != len(self.matrix):
            raise ValueError(f"{len(self.targets)} phase targets for {len(self.matrix)} rows")
        if any(not 0 <= t < 1 for t in self.targets):
            raise ValueError("Phase targets must lie in [0, 1)")

    @property
    def n_unknowns(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0


@dataclass(frozen=True)
class PhaseSolution:
    """
    Solutions of a phase system.

    Attributes:
        consistent: Whether a solution exists
        particular: One solution in [0, 1) per unknown
        generators: Generators of the finite phase kernel (orders > 1)
        orders: Order of each generator
        divisors: Elementary divisors of the design matrix
        rank: Rank of the design matrix
        free_dimension: Unknowns beyond the rank (continuous phase freedom)
    """
    consistent: bool
    particular: Optional[TurnsVector]
    generators: Tuple[TurnsVector, ...] = ()
    orders: Tuple[int, ...] = ()
    divisors: Tuple[int, ...] = ()
    rank: int = 0
    free_dimension: int = 0
    continuous_generators: Tuple[TurnsVector, ...] = field(default=(), repr=False)

    def kernel_order(self) -> int:
        """Size of the finite phase kernel"""
        size = 1
        for order in self.orders:
            size *= order
        return size

    def count(self) -> Count:
        if not self.consistent:
            return 0
        if self.free_dimension > 0:
            return INFINITE_LABEL
        return self.kernel_order()

    def iter_kernel(self) -> Iterator[TurnsVector]:
        """Every element of the finite kernel, reduced mod 1"""
        n = len(self.particular) if self.particular is not None else 0
        for multiples in itertools.product(*(range(order) for order in self.orders)):
            element = [Fraction(0)] * n
            for k, generator in zip(multiples, self.generators):
                if k:
                    element = [e + k * g for e, g in zip(element, generator)]
            yield tuple(e % 1 for e in element)

    def iter_solutions(self) -> Iterator[TurnsVector]:
        """particular + every kernel element, mod 1"""
        if not self.consistent:
            return
        for element in self.iter_kernel():
            yield tuple((p + e) % 1 for p, e in zip(self.particular, element))


@dataclass(frozen=True, eq=False)
class ComplexSolveResult:
    """
    Existence and uniqueness of complex rank-one completions.

    Attributes:
        status: Which subsystem failed, or SOLUTIONS
        base: One solution (phases from the particular phase solution)
        kernel_elements: Phase kernel elements (listed when finite and within the cap)
        count: Number of complex solutions, or "infinite"
        divisors: Elementary divisors of the design matrix
        solutions: Listed solutions in canonical order
        magnitude: Log-magnitude outcome
        phases: Phase outcome (None when the magnitudes already failed)
    """
    status: ComplexStatus
    base: Optional[RankOneFactors]
    kernel_elements: Tuple[TurnsVector, ...]
    count: Count
    divisors: Tuple[int, ...]
    solutions: SolutionSet
    magnitude: MagnitudeSolution
    phases: Optional[PhaseSolution] = None

    def has_solutions(self) -> bool:
        return self.status is ComplexStatus.SOLUTIONS

    def is_unique(self) -> bool:
        return self.count == 1
