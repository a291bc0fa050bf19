"""
Noisy-fit data models
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from models.factors import RankOneFactors
from models.tensor import MultiIndex

UNIFORM_SYMMETRIC = "uniform_symmetric"


@dataclass(frozen=True)
class NoiseSpec:
    """
    Additive noise Q = Q* + ε with ε uniform on [−amplitude, amplitude].

    Attributes:
        amplitude: Half-width of the noise interval
        seed: Seed of the PCG64 generator
        distribution: Only "uniform_symmetric" is supported
    """
    amplitude: float
    seed: int = 0
    distribution: str = UNIFORM_SYMMETRIC

    def __post_init__(self):
        """Validate noise parameters after initialization"""
        if not np.isfinite(self.amplitude) or self.amplitude < 0:
            raise ValueError(f"Noise amplitude must be a nonnegative number, got {self.amplitude}")
        if self.distribution != UNIFORM_SYMMETRIC:
            raise ValueError(f"Unsupported noise distribution: {self.distribution}")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ValueError(f"Seed must fit in 64 bits, got {self.seed}")


@dataclass(frozen=True, eq=False)
class FitResult:
    """
    Log-domain least-squares rank-one fit.

    Attributes:
        factors: Fitted factors (phases all 0)
        objective: Sum of squared log residuals
        residuals: log Q_e − fitted log value, per observation
        relative_disturbance_estimates: (Q_e − Q̂_e) / Q̂_e per observation
        gradient_norm: Norm of the objective gradient at the returned point
        log_solution: Fitted unknowns in design-matrix column order
    """
    factors: RankOneFactors
    objective: float
    residuals: Dict[MultiIndex, float]
    relative_disturbance_estimates: Dict[MultiIndex, float]
    gradient_norm: float = 0.0
    log_solution: np.ndarray = field(default_factory=lambda: np.zeros(0), repr=False)

    def __post_init__(self):
        total = sum(r * r for r in self.residuals.values())
        if not np.isclose(total, self.objective, rtol=1e-9, atol=1e-300):
            raise ValueError(f"Objective {self.objective} differs from the residual sum {total}")

    def max_abs_residual(self) -> float:
        return max((abs(r) for r in self.residuals.values()), default=0.0)


@dataclass(frozen=True)
class FitQuality:
    """
    Errors of a fit against known true factors, both in the standard gauge.

    Attributes:
        max_factor_error: Largest relative error of a factor component
        max_entry_error: Largest relative error of a full-tensor entry
    """
    max_factor_error: float
    max_entry_error: float


@dataclass(frozen=True)
class ReplicationSummary:
    """
    Summary of a repeated generate-fit-compare experiment.

    Attributes:
        amplitude: Noise amplitude used
        runs: Number of seeds
        median_entry_error: Median over seeds of the max relative entry error
        max_entry_error: Worst max relative entry error
        median_factor_error: Median over seeds of the max relative factor error
        errors: Per-seed max relative entry errors, in seed order
    """
    amplitude: float
    runs: int
    median_entry_error: float
    max_entry_error: float
    median_factor_error: float
    errors: Tuple[float, ...] = field(default=(), repr=False)
