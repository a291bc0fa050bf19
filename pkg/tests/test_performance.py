"""
Timing checks on large sparse patterns
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_pattern, tensor_from_factors
from operations.pattern import analyze_pattern
from operations.real_solver import solve_real


@pytest.mark.slow
def test_large_pattern_counts_within_ten_seconds():
    rng = np.random.default_rng(2024)
    dims = (50, 50, 50)
    pattern = random_pattern(rng, dims, 10_000)
    magnitudes = [[Fraction(1)] * n for n in dims]
    phases = [[Fraction(int(x), 2) for x in rng.integers(0, 2, size=n)] for n in dims]
    tensor = tensor_from_factors(pattern, magnitudes, phases)

    start = time.perf_counter()
    report = analyze_pattern(tensor.pattern)
    result = solve_real(tensor, materialize=False)
    elapsed = time.perf_counter() - start

    assert report.condition_a
    assert result.has_solutions()
    assert elapsed < 10.0
