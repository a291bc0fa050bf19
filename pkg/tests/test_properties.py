"""
Property tests: exact solvers against exhaustive enumeration on random instances
"""

import itertools
from fractions import Fraction

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings

from conftest import tensor_from_factors, tensor_from_values
from core.enums import LinearStatus
from linalg.rational import rational_solve
from models.scalars import PolarScalar
from models.tensor import ObservationPattern
from operations.complex_solver import brute_force_sigma, count_complex
from operations.pattern import analyze_pattern, build_design_matrix
from operations.real_solver import brute_force_signs, solve_real
from operations.verification import verify_exact_magnitudes, verify_solution


@st.composite
def small_tensors(draw, max_m=10):
    """3-way tensors with dims up to 4 and unit magnitudes; phases are multiples of 1/6"""
    dims = tuple(draw(st.lists(st.integers(1, 4), min_size=3, max_size=3)))
    cells = list(itertools.product(*(range(1, n + 1) for n in dims)))
    indices = draw(st.lists(st.sampled_from(cells), min_size=1, max_size=max_m, unique=True))
    turns = draw(st.lists(st.integers(0, 5), min_size=len(indices), max_size=len(indices)))
    pattern = ObservationPattern(dims, tuple(indices))
    by_index = dict(zip(indices, turns))
    return tensor_from_values(pattern, [PolarScalar(Fraction(1), Fraction(by_index[i], 6)) for i in pattern])


@st.composite
def real_tensors(draw, max_m=10):
    tensor = draw(small_tensors(max_m))
    signs = draw(st.lists(st.booleans(), min_size=tensor.m(), max_size=tensor.m()))
    return tensor.with_values([PolarScalar.from_signed(Fraction(-1 if s else 1)) for s in signs])


def connected_matrix_pattern(rng, rows, cols):
    """First row and column always observed, the rest with probability 1/2"""
    cells = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)
             if i == 1 or j == 1 or rng.random() < 0.5]
    return ObservationPattern((rows, cols), tuple(cells))


@given(small_tensors())
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_complex_count_matches_enumeration(tensor):
    result = count_complex(tensor)
    oracle = brute_force_sigma(tensor)
    if result.count == "infinite":
        assert oracle.infinite
    else:
        assert oracle.count() == result.count
        assert oracle.same_phases(result.solutions)


@given(real_tensors())
@settings(max_examples=200, deadline=None)
def test_real_count_matches_sign_search(tensor):
    result = solve_real(tensor)
    oracle = brute_force_signs(tensor)
    if result.count == "infinite":
        assert oracle.infinite
    else:
        assert oracle.count() == result.count
        assert oracle.same_phases(result.solutions)


@given(real_tensors())
@settings(max_examples=100, deadline=None)
def test_real_solutions_are_real_members_of_complex_solutions(tensor):
    real = solve_real(tensor)
    complex_result = count_complex(tensor)
    assume(real.count != "infinite" and complex_result.count != "infinite")
    assert complex_result.solutions.real_solutions().phase_keys() == real.solutions.phase_keys()


@given(small_tensors())
@settings(max_examples=100, deadline=None)
def test_every_listed_solution_reproduces_the_observations(tensor):
    result = count_complex(tensor)
    for solution in result.solutions:
        assert verify_solution(tensor, solution)


@given(small_tensors(max_m=8), st.permutations([0, 1, 2]))
@settings(max_examples=100, deadline=None)
def test_counts_are_invariant_under_mode_permutation(tensor, perm):
    assert count_complex(tensor.permute_modes(perm)).count == count_complex(tensor).count


@given(small_tensors(max_m=8))
@settings(max_examples=100, deadline=None)
def test_conjugation_preserves_counts(tensor):
    assert count_complex(tensor.conjugate()).count == count_complex(tensor).count


@pytest.mark.parametrize("seed", range(200))
def test_matrix_completions_are_unique(seed):
    rng = np.random.default_rng(seed)
    rows, cols = (int(n) for n in rng.integers(1, 6, size=2))
    pattern = connected_matrix_pattern(rng, rows, cols)
    assert analyze_pattern(pattern).condition_a
    magnitudes = [[Fraction(int(x)) for x in rng.integers(1, 10, size=n)] for n in (rows, cols)]
    phases = [[Fraction(int(x), 12) for x in rng.integers(0, 12, size=n)] for n in (rows, cols)]
    tensor = tensor_from_factors(pattern, magnitudes, phases)
    result = count_complex(tensor)
    assert result.count == 1
    assert all(d in (0, 1) for d in result.divisors)
    assert verify_exact_magnitudes(tensor, result.solutions[0])


@pytest.mark.parametrize("seed", range(50))
def test_planted_solutions_verify(seed):
    rng = np.random.default_rng(1000 + seed)
    dims = tuple(int(n) for n in rng.integers(2, 5, size=3))
    total = int(np.prod(dims))
    flat = rng.choice(total, size=int(rng.integers(total // 2, total + 1)), replace=False)
    pattern = ObservationPattern(dims, tuple(tuple(int(i) + 1 for i in np.unravel_index(f, dims)) for f in flat))
    magnitudes = [[Fraction(int(x)) for x in rng.integers(1, 6, size=n)] for n in dims]
    phases = [[Fraction(int(x), 4) for x in rng.integers(0, 4, size=n)] for n in dims]
    tensor = tensor_from_factors(pattern, magnitudes, phases)
    result = count_complex(tensor)
    assert result.has_solutions()
    for solution in result.solutions:
        assert verify_solution(tensor, solution)
        assert verify_exact_magnitudes(tensor, solution)


@given(small_tensors(max_m=12))
@settings(max_examples=200, deadline=None)
def test_condition_a_means_only_the_trivial_log_solution(tensor):
    design = build_design_matrix(tensor.pattern)
    solution = rational_solve(design.matrix, [0] * tensor.m())
    if analyze_pattern(tensor.pattern).condition_a:
        assert solution.status is LinearStatus.UNIQUE
        assert not any(solution.particular)
    else:
        assert solution.status is LinearStatus.AFFINE


@given(small_tensors())
@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
def test_phase_kernel_is_closed_under_addition(tensor):
    result = count_complex(tensor)
    assume(result.kernel_elements)
    kernel = set(result.kernel_elements)
    assert len(kernel) == result.count
    assert tuple(Fraction(0) for _ in result.kernel_elements[0]) in kernel
    for first, second in itertools.product(kernel, repeat=2):
        assert tuple((x + y) % 1 for x, y in zip(first, second)) in kernel
    design = build_design_matrix(tensor.pattern).matrix.tolist()
    for element in kernel:
        assert all(sum(a * x for a, x in zip(row, element)) % 1 == 0 for row in design)
