"""
Rank-one fitting of noisy positive observations by log-domain least squares
"""

import functools
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Union

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from core.constants import GRADIENT_RTOL, UNIFORM_MANTISSA_BITS
from core.enums import ValueMode
from core.exceptions import (
    ConditionAViolatedError,
    NoiseAmplitudeError,
    NonPositiveValueError,
    PreconditionError,
)
from core.logging_config import get_logger, log_performance
from linalg.rational import rational_rank
from models.factors import RankOneFactors, evaluate
from models.fit import FitQuality, FitResult, NoiseSpec, ReplicationSummary
from models.scalars import FloatPolar, PolarScalar
from models.tensor import MultiIndex, ObservationPattern, PartialTensor
from operations.pattern import build_design_matrix
from operations.real_solver import assemble_factors

logger = get_logger()

TruthLike = Union[RankOneFactors, Sequence[Sequence[float]]]


@log_performance
def fit_least_squares(tensor: PartialTensor) -> FitResult:
    """
    Minimize Σ (log Q_e − x_i − y_j − z_k)² over the unpinned unknowns.

    The normal equations AᵀA·x = Aᵀq are symmetric positive definite under
    condition (A) and are solved by a Cholesky factorization, with one step
    of iterative refinement when the gradient is not yet small enough.

    Args:
        tensor: Strictly positive real observations

    Returns:
        FitResult: Factors â = exp(x̂) etc., objective and residuals

    Raises:
        NonPositiveValueError: If an observation is not a positive real
        ConditionAViolatedError: If condition (A) fails (dof reported)
    """
    for index, value in tensor.items():
        if not value.is_positive():
            raise NonPositiveValueError(index)

    design = build_design_matrix(tensor.pattern)
    rank = rational_rank(design.matrix)
    n = design.n_cols
    if rank < n:
        raise ConditionAViolatedError(n - rank, rank, n)

    A = design.to_float()
    q = tensor.log_magnitudes()
    gram = A.T @ A
    rhs = A.T @ q
    factor = cho_factor(gram)
    x = cho_solve(factor, rhs)

    tolerance = GRADIENT_RTOL * (1.0 + float(np.linalg.norm(q)))
    gradient_norm = _gradient_norm(A, q, x)
    if gradient_norm > tolerance:
        x = x + cho_solve(factor, rhs - gram @ x)
        refined = _gradient_norm(A, q, x)
        logger.debug(f"Iterative refinement: gradient norm {gradient_norm:.3e} -> {refined:.3e}")
        gradient_norm = refined
        if gradient_norm > tolerance:
            logger.warning(f"Gradient norm {gradient_norm:.3e} above tolerance {tolerance:.3e} after refinement")

    residual = q - A @ x
    residuals: Dict[MultiIndex, float] = {}
    disturbances: Dict[MultiIndex, float] = {}
    for index, r in zip(tensor.pattern.indices, residual.tolist()):
        residuals[index] = r
        disturbances[index] = float(np.expm1(r))

    factors = assemble_factors(design, x)
    objective = float(sum(r * r for r in residuals.values()))
    logger.info(f"Least-squares fit: objective {objective:.6e}, gradient norm {gradient_norm:.3e}")
    return FitResult(factors, objective, residuals, disturbances, gradient_norm, x)


def objective_value(tensor: PartialTensor, log_solution: np.ndarray) -> float:
    """Σ (q_e − (A·x)_e)² at a point x in design-matrix column order"""
    A = build_design_matrix(tensor.pattern).to_float()
    residual = tensor.log_magnitudes() - A @ np.asarray(log_solution, dtype=float)
    return float(residual @ residual)


def _gradient_norm(A: np.ndarray, q: np.ndarray, x: np.ndarray) -> float:
    return float(np.linalg.norm(-2.0 * A.T @ (q - A @ x)))


def uniform_noise(noise: NoiseSpec, size: int) -> np.ndarray:
    """
    Portable uniform draws on [−amplitude, amplitude].

    The generator is PCG64 seeded with noise.seed; each raw 64-bit output
    keeps its 53 high bits: u = (raw >> 11) · 2^−53, ε = amplitude · (2u − 1).
    """
    raw = np.random.PCG64(noise.seed).random_raw(size)
    shift = np.uint64(64 - UNIFORM_MANTISSA_BITS)
    u = (raw >> shift).astype(np.float64) * 2.0 ** -UNIFORM_MANTISSA_BITS
    return noise.amplitude * (2.0 * u - 1.0)


def generate_noisy(factors: RankOneFactors, pattern: ObservationPattern, noise: NoiseSpec) -> PartialTensor:
    """
    Observe a positive rank-one tensor with additive uniform noise.

    Draws happen in canonical observation order, one per observation.

    Args:
        factors: Positive true factors
        pattern: Observation pattern
        noise: Amplitude and seed

    Returns:
        PartialTensor: Float-mode tensor Q_e = Q*_e + ε_e

    Raises:
        PreconditionError: If factors are not positive or dims differ
        NoiseAmplitudeError: If amplitude ≥ min Q* (a value could become nonpositive)
    """
    if factors.dims != pattern.dims:
        raise PreconditionError("generate_noisy", f"factor dims {factors.dims} differ from pattern dims {pattern.dims}")
    if any(p != 0 for p in factors.phase_key()):
        raise PreconditionError("generate_noisy", "true factors must be positive")
    truth = np.array([evaluate(factors, index).magnitude for index in pattern.indices])
    bound = float(truth.min())
    if noise.amplitude >= bound:
        raise NoiseAmplitudeError(noise.amplitude, bound)
    values = truth + uniform_noise(noise, pattern.m())
    logger.debug(f"Generated {pattern.m()} noisy values with amplitude {noise.amplitude}, seed {noise.seed}")
    return PartialTensor(pattern, tuple(FloatPolar(v) for v in values.tolist()), ValueMode.FLOAT)


def rank_one_tensor(components: Sequence[Sequence[Fraction]], pattern: ObservationPattern) -> PartialTensor:
    """
    Exact observations of the rank-one tensor with rational positive components.

    Example:
        >>> rank_one_tensor([[1, 2], [1, 3]], ObservationPattern((2, 2), ((2, 2),))).values[0].magnitude
        Fraction(6, 1)
    """
    if tuple(len(vector) for vector in components) != pattern.dims:
        raise PreconditionError("rank_one_tensor", f"component lengths do not match dims {pattern.dims}")
    values = []
    for index in pattern.indices:
        value = Fraction(1)
        for vector, i in zip(components, index):
            value *= Fraction(vector[i - 1])
        values.append(PolarScalar(value))
    return PartialTensor(pattern, tuple(values), ValueMode.EXACT)


def reconstruct_full(factors: RankOneFactors) -> np.ndarray:
    """Dense magnitudes of the full tensor a ∘ b ∘ c ∘ ..."""
    return functools.reduce(np.multiply.outer, [np.array(vector) for vector in factors.magnitudes()])


def _as_factors(truth: TruthLike) -> RankOneFactors:
    if isinstance(truth, RankOneFactors):
        return truth
    return RankOneFactors.from_components(truth)


def fit_quality(fit: Union[FitResult, RankOneFactors], truth: TruthLike) -> FitQuality:
    """
    Relative errors of fitted factors against true ones.

    Both sides are compared in the standard gauge, so any rescaling
    λ_1·a, λ_2·b, ... with λ_1·λ_2·... = 1 of the truth gives the same result.

    Raises:
        PreconditionError: If dims differ
    """
    fitted = fit.factors if isinstance(fit, FitResult) else fit
    truth = _as_factors(truth)
    if fitted.dims != truth.dims:
        raise PreconditionError("fit_quality", f"fitted dims {fitted.dims} differ from true dims {truth.dims}")
    factor_error = max(
        abs(f - t) / abs(t)
        for fitted_vector, true_vector in zip(fitted.magnitudes(), truth.magnitudes())
        for f, t in zip(fitted_vector, true_vector)
    )
    full_true = reconstruct_full(truth)
    entry_error = float(np.max(np.abs(reconstruct_full(fitted) - full_true) / np.abs(full_true)))
    return FitQuality(float(factor_error), entry_error)


@log_performance
def replicate_noise_experiment(truth: TruthLike, pattern: ObservationPattern, amplitude: float,
                               seeds: Iterable[int]) -> ReplicationSummary:
    """
    Repeat generate → fit → compare over many seeds.

    Returns:
        ReplicationSummary: Median and worst max-relative-entry error
    """
    truth = _as_factors(truth)
    entry_errors = []
    factor_errors = []
    for seed in seeds:
        tensor = generate_noisy(truth, pattern, NoiseSpec(amplitude, seed))
        quality = fit_quality(fit_least_squares(tensor), truth)
        entry_errors.append(quality.max_entry_error)
        factor_errors.append(quality.max_factor_error)
    if not entry_errors:
        raise PreconditionError("replicate_noise_experiment", "no seeds given")
    summary = ReplicationSummary(
        amplitude=amplitude,
        runs=len(entry_errors),
        median_entry_error=float(np.median(entry_errors)),
        max_entry_error=float(np.max(entry_errors)),
        median_factor_error=float(np.median(factor_errors)),
        errors=tuple(entry_errors),
    )
    logger.info(f"Replicated {summary.runs} fits at amplitude {amplitude}: "
                f"median max-entry error {summary.median_entry_error:.4f}")
    return summary
