"""
Complex rank-one completions: phase congruences solved through the Smith form
"""

from fractions import Fraction
from math import lcm
from typing import Optional, Set, Tuple

import numpy as np

from core.config import Config
from core.constants import MAX_ORACLE_LIFTS, ORACLE_CHUNK_SIZE
from core.enums import ComplexStatus
from core.exceptions import CapExceededError, PreconditionError
from core.logging_config import get_logger, log_performance
from linalg.integer import SmithDecomposition, integer_smith
from linalg.rational import RationalMatrix, rational_rank, rref
from models.design import DesignMatrix
from models.results import ComplexSolveResult, MagnitudeSolution, PhaseSolution, PhaseSystem, TurnsVector
from models.solutions import SolutionSet
from models.tensor import PartialTensor
from operations.pattern import build_design_matrix
from operations.real_solver import assemble_factors, solve_magnitudes
from utils.number_theory import common_denominator

logger = get_logger()


def build_phase_system(tensor: PartialTensor, design: Optional[DesignMatrix] = None) -> PhaseSystem:
    """
    Phase congruences α_i + β_j + γ_k ≡ t_ijk (mod 1) of a tensor.

    Raises:
        InexactPhaseError: If a float phase is not close to a rational
    """
    design = design or build_design_matrix(tensor.pattern)
    return PhaseSystem(tuple(tuple(row) for row in design.matrix.tolist()), tuple(tensor.phase_targets()))


def solve_phase_system(ps: PhaseSystem, smith: Optional[SmithDecomposition] = None) -> PhaseSolution:
    """
    Solve A·φ ≡ t (mod 1) exactly.

    With U·A·V = D the system becomes D·ψ ≡ U·t with φ = V·ψ. It is
    consistent iff (U·t)_i is an integer for every i beyond the rank. Each
    divisor d_i > 1 contributes a kernel generator V·e_i / d_i of order d_i,
    and every unknown beyond the rank a continuous direction.

    Args:
        ps: Phase system
        smith: Smith decomposition of ps.matrix (computed when omitted)

    Returns:
        PhaseSolution: Consistency, particular solution and kernel generators
    """
    smith = smith or integer_smith(ps.matrix)
    m, n = smith.n_rows, smith.n_cols
    r = smith.rank
    s = [sum((u * t for u, t in zip(row, ps.targets) if u and t), Fraction(0)) for row in smith.U]

    if any(s[i].denominator != 1 for i in range(r, m)):
        logger.debug("Phase system is inconsistent")
        return PhaseSolution(False, None, divisors=smith.divisors, rank=r, free_dimension=n - r)

    psi = [s[i] / smith.divisors[i] for i in range(r)] + [Fraction(0)] * (n - r)
    particular = _apply_mod_one(smith.V, psi)

    generators = []
    orders = []
    for i in range(r):
        d = smith.divisors[i]
        if d > 1:
            generators.append(tuple((Fraction(row[i], d)) % 1 for row in smith.V))
            orders.append(d)
    continuous = tuple(tuple(Fraction(row[i]) for row in smith.V) for i in range(r, n))
    return PhaseSolution(True, particular, tuple(generators), tuple(orders), smith.divisors, r,
                         n - r, continuous)


def _apply_mod_one(V, psi) -> TurnsVector:
    return tuple(sum((v * x for v, x in zip(row, psi) if v and x), Fraction(0)) % 1 for row in V)


@log_performance
def count_complex(tensor: PartialTensor, materialize: bool = True) -> ComplexSolveResult:
    """
    Existence, count and enumeration of complex rank-one completions.

    A complex completion exists iff the log-magnitude system and the phase
    congruences are both consistent. Under condition (A) the number of
    solutions is the product of the elementary divisors of the design matrix;
    otherwise the solutions form an infinite family.

    Args:
        tensor: Nonzero observations
        materialize: List the solutions when there are at most COMPLEX_MATERIALIZATION_CAP

    Returns:
        ComplexSolveResult: Status, count, divisors and canonically ordered solutions
    """
    design = build_design_matrix(tensor.pattern)
    rank = rational_rank(design.matrix)
    condition_a = rank == design.n_cols

    magnitude = solve_magnitudes(tensor, design, rank, materialize)
    if not magnitude.consistent:
        logger.info("No complex completion: magnitude system is inconsistent")
        return ComplexSolveResult(ComplexStatus.NO_SOLUTION_MAGNITUDE, None, (), 0, (), SolutionSet(), magnitude)

    ps = build_phase_system(tensor, design)
    phases = solve_phase_system(ps)
    if not phases.consistent:
        logger.info("No complex completion: phase system is inconsistent")
        return ComplexSolveResult(ComplexStatus.NO_SOLUTION_PHASE, None, (), 0, phases.divisors,
                                  SolutionSet(), magnitude, phases)

    count = phases.count()
    base = _complex_solution(design, magnitude, phases.particular, tensor.m()) if materialize else None
    kernel_elements: Tuple[TurnsVector, ...] = ()
    if not condition_a:
        solutions = SolutionSet([base] if base is not None else [], infinite=True)
        logger.info(f"Condition (A) fails (dof {design.n_cols - rank}); infinitely many complex completions")
    elif count <= Config.COMPLEX_MATERIALIZATION_CAP:
        kernel_elements = tuple(phases.iter_kernel())
        solutions = SolutionSet(total=count)
        if materialize:
            for phase_vector in phases.iter_solutions():
                solutions.add_solution(_complex_solution(design, magnitude, phase_vector, tensor.m()))
    else:
        logger.warning(f"{count} complex solutions exceed the cap {Config.COMPLEX_MATERIALIZATION_CAP}; "
                       f"listing the base solution only")
        solutions = SolutionSet([base] if base is not None else [], total=count)

    logger.info(f"Complex completions: {count} (divisors {list(phases.divisors)})")
    return ComplexSolveResult(ComplexStatus.SOLUTIONS, base, kernel_elements, count, phases.divisors,
                              solutions, magnitude, phases)


def _complex_solution(design: DesignMatrix, magnitude: MagnitudeSolution, phase_vector: TurnsVector, m: int):
    return assemble_factors(design, magnitude.log_values, phase_vector, magnitude.exponents, m)


def non_uniqueness_witness(tensor: PartialTensor) -> Optional[TurnsVector]:
    """
    A nontrivial phase-kernel element, proving a second complex solution.

    Adding the returned phases (one per design-matrix column, in turns) to
    any solution gives a different solution. None proves global uniqueness
    over the complex numbers. The smallest nontrivial element in canonical
    order is returned.

    Raises:
        PreconditionError: If condition (A) fails or no complex solution exists
    """
    design = build_design_matrix(tensor.pattern)
    rank = rational_rank(design.matrix)
    if rank != design.n_cols:
        raise PreconditionError("non_uniqueness_witness", f"condition (A) fails (dof {design.n_cols - rank})")
    if not solve_magnitudes(tensor, design, rank, materialize=False).consistent:
        raise PreconditionError("non_uniqueness_witness", "the magnitude system is inconsistent")
    phases = solve_phase_system(build_phase_system(tensor, design))
    if not phases.consistent:
        raise PreconditionError("non_uniqueness_witness", "the phase system is inconsistent")
    if not phases.generators:
        return None

    zero = (Fraction(0),) * design.n_cols
    if phases.kernel_order() <= Config.COMPLEX_MATERIALIZATION_CAP:
        candidates = (element for element in phases.iter_kernel())
    else:
        candidates = (
            tuple((k * g) % 1 for g in generator)
            for generator, order in zip(phases.generators, phases.orders)
            for k in range(1, order)
        )
    return min(element for element in candidates if element != zero)


@log_performance
def brute_force_sigma(tensor: PartialTensor) -> SolutionSet:
    """
    Exhaustive complex-solution oracle over every integer lift of the phases.

    A solution φ ∈ [0, 1)^n satisfies A·φ = t + σ with σ_e ∈ {0, ..., d−1},
    because a sum of d phases in [0, 1) is below d. Every σ is tried: the
    rational system is solved once in reduced form and each σ then costs one
    integer matrix-vector product.

    Raises:
        CapExceededError: If m exceeds the oracle cap (RANKONE_ORACLE_CAP) or
            the d**m lifts do not fit the int64 lift index
    """
    m = tensor.m()
    cap = Config.oracle_cap()
    if m > cap:
        raise CapExceededError("brute_force_sigma observations", m, cap)
    d = tensor.order
    total = d ** m
    if total > MAX_ORACLE_LIFTS:
        raise CapExceededError("brute_force_sigma lifts", total, MAX_ORACLE_LIFTS)

    design = build_design_matrix(tensor.pattern)
    n = design.n_cols
    magnitude = solve_magnitudes(tensor, design)
    if not magnitude.consistent:
        return SolutionSet()

    targets = tensor.phase_targets()
    reduced = rref(RationalMatrix.from_array(design.matrix), with_transform=True)
    r = reduced.rank
    E = reduced.transform

    # N / D = E·(t + σ) with integer numerators
    e_scale = common_denominator([x for row in E.entries for x in row])
    Et = E.apply(targets)
    D = lcm(e_scale, common_denominator(Et))
    W = [int(x * D) for x in Et]
    E_int = [[int(x * D) for x in row] for row in E.entries]
    bound = max(abs(x) for row in E_int for x in row) * (tensor.order - 1) * m + max(abs(x) for x in W)
    dtype = np.int64 if bound < 2 ** 62 else object
    E_np = np.array(E_int, dtype=dtype)
    W_np = np.array(W, dtype=dtype)

    place = np.array([d ** e for e in range(m)], dtype=np.int64)
    found: Set[TurnsVector] = set()
    for start in range(0, total, ORACLE_CHUNK_SIZE):
        lifts = np.arange(start, min(start + ORACLE_CHUNK_SIZE, total), dtype=np.int64)
        sigma = (lifts[:, None] // place) % d
        numerators = sigma.astype(dtype) @ E_np.T + W_np
        ok = np.all(numerators[:, r:] == 0, axis=1)
        if r == n:
            ok &= np.all((numerators[:, :r] >= 0) & (numerators[:, :r] < D), axis=1)
        for row in numerators[ok][:, :r].tolist():
            phi = [Fraction(0)] * n
            for value, column in zip(row, reduced.pivots):
                phi[column] = Fraction(int(value), D) % 1
            found.add(tuple(phi))

    logger.debug(f"brute_force_sigma tried {total} lifts, found {len(found)} phase solutions")
    if r < n:
        # Any consistent lift opens a continuous family of phases
        solutions = SolutionSet(infinite=bool(found))
        if found:
            solutions.add_solution(_complex_solution(design, magnitude, min(found), m))
        return solutions
    return SolutionSet(_complex_solution(design, magnitude, phi, m) for phi in sorted(found))
