"""
Real rank-one completions: log-magnitude system plus GF(2) sign system
"""

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.config import Config
from core.constants import FLOAT_CONSISTENCY_RTOL, ORACLE_CHUNK_SIZE
from core.enums import RealStatus
from core.exceptions import CapExceededError
from core.logging_config import get_logger, log_performance
from linalg.gf2 import gf2_solve
from linalg.integer import integer_left_kernel
from linalg.rational import (
    RationalMatrix,
    independent_rows,
    rational_inverse,
    rational_kernel,
    rational_rank,
    rref,
)
from models.design import DesignMatrix
from models.factors import FactorEntry, RankOneFactors
from models.results import MagnitudeSolution, RealSolveResult, SignSystem
from models.solutions import SolutionSet
from models.tensor import PartialTensor
from operations.pattern import build_design_matrix
from utils.number_theory import exponent_table, power_product_is_one

logger = get_logger()


def solve_magnitudes(tensor: PartialTensor, design: Optional[DesignMatrix] = None,
                     rank: Optional[int] = None, materialize: bool = True) -> MagnitudeSolution:
    """
    Solve x_i + y_j + z_k = log|Q_ijk| for the unknown log-magnitudes.

    In exact mode consistency is decided without floating point. A design
    matrix of full row rank accepts any magnitudes. Small systems are checked
    against an integer basis u of the left kernel of the design matrix:
    prod |Q_e|^u_e must equal 1 exactly, and a failing u is kept as a
    certificate. Large systems compare rank(A) with rank([A | exponents]),
    the exponents being taken over a coprime base of the observed values.

    In float mode consistency is a least-squares residual test with tolerance
    FLOAT_CONSISTENCY_RTOL * (1 + max|q|).

    Args:
        tensor: Observations
        design: Design matrix of the tensor's pattern (built when omitted)
        rank: Rank of the design matrix (computed when omitted)
        materialize: Also produce log values, exponent vectors and the kernel basis

    Returns:
        MagnitudeSolution: Consistency and, when materialized, the solution
    """
    design = design or build_design_matrix(tensor.pattern)
    A = design.matrix
    n = design.n_cols
    if rank is None:
        rank = rational_rank(A)

    if not tensor.is_exact():
        return _solve_float_magnitudes(tensor, design, rank, materialize)

    magnitudes = tensor.exact_magnitudes()
    if all(value == 1 for value in magnitudes):
        method = "unit"
        certificate = None
        consistent = True
    elif rank == tensor.m():
        method = "full-rank"
        certificate = None
        consistent = True
    elif tensor.m() <= Config.CERTIFICATE_MAX_ROWS:
        method = "certificate"
        certificate = _violated_certificate(A, magnitudes)
        consistent = certificate is None
    else:
        method = "augmented-rank"
        certificate = None
        base, V = exponent_table(magnitudes)
        augmented = np.hstack([A, np.array(V, dtype=object).reshape(len(V), len(base))])
        consistent = rational_rank(augmented) == rank
    logger.debug(f"Magnitude system ({method}): {'consistent' if consistent else 'inconsistent'}")

    if not consistent:
        return MagnitudeSolution(False, method, certificate=certificate)
    if not materialize:
        return MagnitudeSolution(True, method)

    exponents = _exponent_vectors(A, tensor.m(), n)
    q = tensor.log_magnitudes()
    log_values = np.array([
        math.fsum(float(r) * q[e] for e, r in enumerate(vector) if r) for vector in exponents
    ], dtype=float)
    kernel = rational_kernel(A) if rank < n else ()
    return MagnitudeSolution(True, method, log_values, exponents, kernel)


def _violated_certificate(A: np.ndarray, magnitudes: Sequence[Fraction]) -> Optional[Tuple[int, ...]]:
    """First left-kernel vector u with prod |Q_e|^u_e != 1, or None"""
    for u in integer_left_kernel(A):
        if not power_product_is_one(magnitudes, u):
            return tuple(u)
    return None


def _exponent_vectors(A: np.ndarray, m: int, n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """
    Each unknown as a rational combination of the observed log-magnitudes.

    A row basis B of A and the pivot columns P of A_B give the invertible
    block A_B[:, P]; free unknowns are set to zero.
    """
    basis = independent_rows(A)
    zero = (Fraction(0),) * m
    exponents: List[Tuple[Fraction, ...]] = [zero] * n
    if not basis:
        return tuple(exponents)
    A_B = RationalMatrix.from_array(A[list(basis)])
    pivots = rref(A_B).pivots
    inverse = rational_inverse(A_B.select_columns(pivots))
    for j, column in enumerate(pivots):
        vector = list(zero)
        for b, row in enumerate(basis):
            vector[row] = inverse[j, b]
        exponents[column] = tuple(vector)
    return tuple(exponents)


def _solve_float_magnitudes(tensor: PartialTensor, design: DesignMatrix, rank: int,
                            materialize: bool) -> MagnitudeSolution:
    q = tensor.log_magnitudes()
    A = design.to_float()
    x, *_ = np.linalg.lstsq(A, q, rcond=None)
    residual = float(np.max(np.abs(A @ x - q)))
    tolerance = FLOAT_CONSISTENCY_RTOL * (1.0 + float(np.max(np.abs(q))))
    consistent = residual <= tolerance
    logger.debug(f"Float magnitude residual {residual:.3e} (tolerance {tolerance:.3e})")
    if not consistent:
        return MagnitudeSolution(False, "least-squares", residual=residual)
    kernel = rational_kernel(design.matrix) if materialize and rank < design.n_cols else ()
    return MagnitudeSolution(True, "least-squares", x if materialize else None, None, kernel, residual=residual)


def assemble_factors(design: DesignMatrix, log_values: np.ndarray,
                     phases: Optional[Sequence[Fraction]] = None,
                     exponents: Optional[Sequence[Tuple[Fraction, ...]]] = None,
                     m: int = 0) -> RankOneFactors:
    """
    Build factor vectors from per-column log-magnitudes and phases.

    Pinned components are exactly 1 with a zero exponent vector.
    """
    vectors = []
    zero = (Fraction(0),) * m if exponents is not None else None
    for k, n_k in enumerate(design.dims, start=1):
        vector = []
        for i in range(1, n_k + 1):
            column = design.column_of(k, i)
            if column is None:
                vector.append(FactorEntry(1.0, Fraction(0), zero))
                continue
            vector.append(FactorEntry(
                math.exp(log_values[column]),
                phases[column] if phases is not None else Fraction(0),
                exponents[column] if exponents is not None else None,
            ))
        vectors.append(tuple(vector))
    return RankOneFactors(tuple(vectors))


def build_sign_system(tensor: PartialTensor, design: Optional[DesignMatrix] = None) -> SignSystem:
    """
    GF(2) system for the signs of a real completion.

    Bit 1 means negative: c_e = 1 exactly when Q_e < 0, and an unknown bit
    of 1 means the factor component is negative. The pinned components are
    +1, i.e. bit 0.

    Raises:
        NonRealValueError: If an observation is not real
    """
    c = tuple(tensor.sign_bits())
    design = design or build_design_matrix(tensor.pattern)
    return SignSystem(design.to_gf2(), c)


@log_performance
def solve_real(tensor: PartialTensor, materialize: bool = True) -> RealSolveResult:
    """
    Existence, uniqueness and enumeration of real rank-one completions.

    A real completion exists iff the log-magnitude system and the GF(2) sign
    system are both consistent. Under condition (A) there are exactly 2^k
    solutions, k being the dimension of the GF(2) kernel; otherwise the
    solutions form an infinite family.

    Args:
        tensor: Real nonzero observations
        materialize: List the solutions (counts are always computed)

    Returns:
        RealSolveResult: Status, count and the canonically ordered solutions

    Raises:
        NonRealValueError: If an observation is not real
    """
    tensor.require_real()
    design = build_design_matrix(tensor.pattern)
    rank = rational_rank(design.matrix)
    condition_a = rank == design.n_cols

    magnitude = solve_magnitudes(tensor, design, rank, materialize)
    if not magnitude.consistent:
        logger.info("No real completion: magnitude system is inconsistent")
        return RealSolveResult(RealStatus.NO_SOLUTION_MAGNITUDE, SolutionSet(), 0, magnitude)

    system = build_sign_system(tensor, design)
    signs = gf2_solve(system.matrix, system.c)
    if not signs.is_consistent():
        logger.info("No real completion: sign system is inconsistent")
        return RealSolveResult(RealStatus.NO_SOLUTION_SIGN, SolutionSet(), 0, magnitude, signs)

    k = signs.kernel_dimension
    if not condition_a:
        solutions = SolutionSet(infinite=True)
        if materialize:
            solutions.add_solution(_real_solution(design, magnitude, signs.particular, tensor.m()))
        logger.info(f"Condition (A) fails (dof {design.n_cols - rank}); infinitely many real completions")
        return RealSolveResult(RealStatus.SOLUTIONS, solutions, solutions.count(), magnitude, signs)

    count = 1 << k
    solutions = SolutionSet(total=count)
    if materialize:
        if k > Config.REAL_ENUMERATION_MAX_KERNEL:
            logger.warning(f"GF(2) kernel dimension {k} exceeds {Config.REAL_ENUMERATION_MAX_KERNEL}; "
                           f"listing one of {count} real solutions")
            solutions.add_solution(_real_solution(design, magnitude, signs.particular, tensor.m()))
        else:
            for bits in signs.iter_solutions():
                solutions.add_solution(_real_solution(design, magnitude, bits, tensor.m()))
    logger.info(f"Real completions: {count} (GF(2) kernel dimension {k})")
    return RealSolveResult(RealStatus.SOLUTIONS, solutions, count, magnitude, signs)


def _real_solution(design: DesignMatrix, magnitude: MagnitudeSolution, bits: Sequence[int],
                   m: int) -> RankOneFactors:
    phases = [Fraction(bit, 2) for bit in bits]
    return assemble_factors(design, magnitude.log_values, phases, magnitude.exponents, m)


@log_performance
def brute_force_signs(tensor: PartialTensor) -> SolutionSet:
    """
    Exhaustive real-solution oracle over all 2^unknowns sign vectors.

    Every sign vector is tested against the sign system directly, with no
    elimination, and combined with the magnitude solution.

    Raises:
        CapExceededError: If there are more than SIGN_ORACLE_MAX_UNKNOWNS unknowns
        NonRealValueError: If an observation is not real
    """
    tensor.require_real()
    design = build_design_matrix(tensor.pattern)
    n = design.n_cols
    if n > Config.SIGN_ORACLE_MAX_UNKNOWNS:
        raise CapExceededError("brute_force_signs unknowns", n, Config.SIGN_ORACLE_MAX_UNKNOWNS)

    rank = rational_rank(design.matrix)
    magnitude = solve_magnitudes(tensor, design, rank)
    if not magnitude.consistent:
        return SolutionSet()

    c = np.array(tensor.sign_bits(), dtype=np.int64)
    transposed = design.matrix.T
    shifts = np.arange(n, dtype=np.int64)
    matches: List[np.ndarray] = []
    for start in range(0, 1 << n, ORACLE_CHUNK_SIZE):
        candidates = np.arange(start, min(start + ORACLE_CHUNK_SIZE, 1 << n), dtype=np.int64)
        bits = (candidates[:, None] >> shifts) & 1
        hits = np.all(((bits @ transposed) & 1) == c, axis=1)
        matches.extend(bits[hits])

    if rank < n:
        solutions = SolutionSet(infinite=bool(matches))
        if matches:
            solutions.add_solution(_real_solution(design, magnitude, matches[0].tolist(), tensor.m()))
        return solutions
    return SolutionSet(_real_solution(design, magnitude, bits.tolist(), tensor.m()) for bits in matches)
