"""
Checking candidate completions against the observations
"""

from fractions import Fraction
from typing import List

from core.constants import SOLUTION_MAGNITUDE_RTOL
from core.exceptions import PreconditionError
from models.factors import RankOneFactors, evaluate
from models.tensor import MultiIndex, PartialTensor
from utils.number_theory import base_exponents, rational_base, rational_power_product


def solution_violations(tensor: PartialTensor, factors: RankOneFactors,
                        rtol: float = SOLUTION_MAGNITUDE_RTOL) -> List[MultiIndex]:
    """
    Observations a candidate solution fails to reproduce.

    Phases must match exactly; magnitudes within rtol relative.
    """
    if factors.dims != tensor.dims:
        raise PreconditionError("verify_solution", f"factor dims {factors.dims} differ from tensor dims {tensor.dims}")
    violations = []
    for (index, value), target in zip(tensor.items(), tensor.phase_targets()):
        produced = evaluate(factors, index)
        if produced.phase_turns != target:
            violations.append(index)
        elif abs(produced.magnitude - float(value.magnitude)) > rtol * float(value.magnitude):
            violations.append(index)
    return violations


def verify_solution(tensor: PartialTensor, factors: RankOneFactors,
                    rtol: float = SOLUTION_MAGNITUDE_RTOL) -> bool:
    """
    Whether a candidate solution reproduces every observation.

    Example:
        >>> verify_solution(tensor, result.solutions[0])
        True
    """
    return not solution_violations(tensor, factors, rtol)


def verify_exact_magnitudes(tensor: PartialTensor, factors: RankOneFactors) -> bool:
    """
    Check magnitudes symbolically through their exponent vectors.

    For every observation e the summed exponent vectors of its components
    must reproduce the factorisation of |Q_e| over a coprime base exactly.

    Raises:
        PreconditionError: If the tensor is not exact or factors carry no exponents
    """
    if not tensor.is_exact():
        raise PreconditionError("verify_exact_magnitudes", "the tensor is not in exact mode")
    if any(entry.exponents is None for vector in factors.vectors for entry in vector):
        raise PreconditionError("verify_exact_magnitudes", "factors carry no exponent vectors")
    magnitudes = tensor.exact_magnitudes()
    base = rational_base(magnitudes)
    for index, value in tensor.items():
        combined = [Fraction(0)] * tensor.m()
        for vector, i in zip(factors.vectors, index):
            for e, r in enumerate(vector[i - 1].exponents):
                if r:
                    combined[e] += r
        expected = {b: Fraction(power) for b, power in base_exponents(value.magnitude, base).items()}
        if rational_power_product(magnitudes, combined, base) != expected:
            return False
    return True
