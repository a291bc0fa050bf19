"""
Tests for real rank-one completion
"""

from fractions import Fraction

import numpy as np
import pytest

from conftest import random_pattern, tensor_from_factors, tensor_from_values
from core.config import Config
from core.enums import RealStatus, ValueMode
from core.exceptions import CapExceededError, NonRealValueError
from models.scalars import FloatPolar, PolarScalar
from models.tensor import ObservationPattern, PartialTensor
from operations.real_solver import brute_force_signs, build_sign_system, solve_magnitudes, solve_real
from operations.verification import verify_exact_magnitudes, verify_solution

FULL_2X2 = ObservationPattern((2, 2), ((1, 1), (1, 2), (2, 1), (2, 2)))

# Mersenne primes; products of two of them are semiprimes of 46 to 71 digits
P61, P89, P107, P127 = 2 ** 61 - 1, 2 ** 89 - 1, 2 ** 107 - 1, 2 ** 127 - 1


def _signed(values):
    return [PolarScalar.from_signed(Fraction(v)) for v in values]


class TestMagnitudes:

    def test_unit_observations(self, table1):
        magnitude = solve_magnitudes(table1)
        assert magnitude.consistent
        assert magnitude.method == "unit"
        assert np.allclose(magnitude.log_values, 0.0)

    def test_certificate_of_inconsistency(self):
        tensor = tensor_from_values(FULL_2X2, _signed([1, 1, 1, 2]))
        magnitude = solve_magnitudes(tensor)
        assert not magnitude.consistent
        assert magnitude.method == "certificate"
        assert magnitude.certificate == (1, -1, -1, 1)

    def test_augmented_rank_for_large_systems(self, monkeypatch):
        monkeypatch.setattr(Config, "CERTIFICATE_MAX_ROWS", 2)
        tensor = tensor_from_values(FULL_2X2, _signed([1, 1, 1, 2]))
        magnitude = solve_magnitudes(tensor)
        assert not magnitude.consistent
        assert magnitude.method == "augmented-rank"
        assert magnitude.certificate is None

    def test_exact_exponents(self):
        tensor = tensor_from_values(FULL_2X2, _signed([2, 6, 4, 12]))
        result = solve_real(tensor)
        assert result.count == 1
        solution = result.solutions[0]
        assert solution.magnitudes()[0] == pytest.approx((1.0, 2.0))
        assert solution.magnitudes()[1] == pytest.approx((2.0, 6.0))
        assert verify_exact_magnitudes(tensor, solution)

    def test_full_row_rank_accepts_any_magnitudes(self):
        entries = {
            (1, 1): PolarScalar(Fraction(1)),
            (1, 2): PolarScalar(Fraction(P61 * P89)),
            (2, 1): PolarScalar(Fraction(P107 * P127)),
        }
        magnitude = solve_magnitudes(PartialTensor.from_entries((2, 2), entries))
        assert magnitude.consistent
        assert magnitude.method == "full-rank"

    def test_semiprime_certificate(self):
        consistent = _signed([P61 * P107, P61 * P127, P89 * P107, P89 * P127])
        magnitude = solve_magnitudes(tensor_from_values(FULL_2X2, consistent))
        assert magnitude.consistent
        assert magnitude.method == "certificate"

        broken = _signed([P61 * P107, P61 * P127, P89 * P107, P89 * P107])
        magnitude = solve_magnitudes(tensor_from_values(FULL_2X2, broken))
        assert not magnitude.consistent
        assert magnitude.certificate == (1, -1, -1, 1)

    @pytest.mark.parametrize("values,expected", [
        ([P61 * P107, P61 * P127, P89 * P107, P89 * P127], True),
        ([P61 * P107, Fraction(P61, P127), P89 * P107, Fraction(P89, P127)], True),
        ([P61 * P107, P61 * P127, P89 * P107, P89 * P107], False),
    ])
    def test_semiprime_augmented_rank(self, monkeypatch, values, expected):
        monkeypatch.setattr(Config, "CERTIFICATE_MAX_ROWS", 2)
        magnitude = solve_magnitudes(tensor_from_values(FULL_2X2, _signed(values)))
        assert magnitude.method == "augmented-rank"
        assert magnitude.consistent is expected

    def test_semiprime_solution_verifies_exactly(self):
        tensor = tensor_from_values(FULL_2X2, _signed([P61 * P107, P61 * P127, P89 * P107, P89 * P127]))
        result = solve_real(tensor)
        assert result.count == 1
        assert verify_exact_magnitudes(tensor, result.solutions[0])
        assert verify_solution(tensor, result.solutions[0])

    def test_float_consistency(self):
        values = (FloatPolar(2.0), FloatPolar(6.0), FloatPolar(4.0), FloatPolar(12.0))
        magnitude = solve_magnitudes(PartialTensor(FULL_2X2, values, ValueMode.FLOAT))
        assert magnitude.consistent
        assert magnitude.method == "least-squares"
        assert np.exp(magnitude.log_values) == pytest.approx([2.0, 2.0, 6.0])

    def test_float_inconsistency(self):
        values = (FloatPolar(2.0), FloatPolar(6.0), FloatPolar(4.0), FloatPolar(12.5))
        magnitude = solve_magnitudes(PartialTensor(FULL_2X2, values, ValueMode.FLOAT))
        assert not magnitude.consistent
        assert magnitude.residual > 1e-3


class TestSolveReal:

    def test_cross_pattern_is_unique(self, table1):
        result = solve_real(table1)
        assert result.status is RealStatus.SOLUTIONS
        assert result.count == 1
        assert result.kernel_dimension == 0
        assert result.solutions[0].magnitudes() == ((1.0, 1.0, 1.0),) * 3
        assert result.solutions[0].phase_key() == (Fraction(0),) * 9

    def test_table2_has_two_sign_patterns(self, table2):
        result = solve_real(table2)
        assert result.count == 2
        assert result.kernel_dimension == 1
        first, second = result.solutions
        assert first.phase_key() == (Fraction(0),) * 9
        half = Fraction(1, 2)
        assert second.entry(1, 3).phase_turns == half
        assert second.entry(2, 3).phase_turns == half
        assert second.entry(3, 3).phase_turns == half
        assert sum(1 for p in second.phase_key() if p) == 3
        for solution in result.solutions:
            assert verify_solution(table2, solution)

    def test_table4_sign_system_is_inconsistent(self, table4):
        result = solve_real(table4)
        assert result.status is RealStatus.NO_SOLUTION_SIGN
        assert result.count == 0
        assert not result.has_solutions()
        assert result.kernel_dimension is None

    def test_magnitude_failure(self):
        result = solve_real(tensor_from_values(FULL_2X2, _signed([1, 1, 1, 2])))
        assert result.status is RealStatus.NO_SOLUTION_MAGNITUDE
        assert result.signs is None

    def test_sign_failure_in_matrix(self):
        result = solve_real(tensor_from_values(FULL_2X2, _signed([1, 1, 1, -1])))
        assert result.status is RealStatus.NO_SOLUTION_SIGN

    def test_underdetermined_is_infinite(self):
        tensor = tensor_from_values(ObservationPattern((2, 2), ((1, 1),)), _signed([-3]))
        result = solve_real(tensor)
        assert result.count == "infinite"
        assert result.solutions.infinite
        assert result.magnitude.family_dimension == 2
        assert verify_solution(tensor, result.solutions.first())

    def test_non_real_observations(self):
        tensor = tensor_from_values(FULL_2X2, [PolarScalar(Fraction(1), Fraction(1, 3))] + _signed([1, 1, 1]))
        with pytest.raises(NonRealValueError):
            solve_real(tensor)

    def test_counts_without_materializing(self, table2):
        result = solve_real(table2, materialize=False)
        assert result.count == 2
        assert len(result.solutions) == 0

    def test_sign_system_bits(self, table4):
        system = build_sign_system(table4)
        assert system.c[0] == 1
        assert sum(system.c) == 1


class TestSignOracle:

    @pytest.mark.parametrize("name", ["table1", "table2", "table3", "table4"])
    def test_oracle_agrees_on_bundled_tables(self, name, request):
        tensor = request.getfixturevalue(name)
        result = solve_real(tensor)
        oracle = brute_force_signs(tensor)
        assert len(oracle) == (result.count if result.has_solutions() else 0)
        assert oracle.same_phases(result.solutions)

    @pytest.mark.parametrize("seed", range(15))
    def test_oracle_agrees_on_random_signs(self, seed):
        rng = np.random.default_rng(seed)
        pattern = random_pattern(rng, (3, 3, 3), int(rng.integers(4, 10)))
        signs = rng.choice([-1, 1], size=pattern.m())
        tensor = tensor_from_values(pattern, _signed(signs.tolist()))
        result = solve_real(tensor)
        oracle = brute_force_signs(tensor)
        if result.count == "infinite":
            assert oracle.infinite
        else:
            assert oracle.count() == result.count
            assert oracle.same_phases(result.solutions)

    def test_planted_solution_is_recovered(self):
        rng = np.random.default_rng(7)
        pattern = random_pattern(rng, (3, 3, 3), 9)
        magnitudes = [[1, 2, 3], [1, Fraction(1, 2), 5], [7, 2, 3]]
        phases = [[0, Fraction(1, 2), 0], [0, 0, Fraction(1, 2)], [Fraction(1, 2), 0, 0]]
        tensor = tensor_from_factors(pattern, magnitudes, phases)
        result = solve_real(tensor)
        assert result.has_solutions()
        for solution in result.solutions:
            assert verify_solution(tensor, solution)
            assert verify_exact_magnitudes(tensor, solution)

    def test_cap(self, monkeypatch, table1):
        monkeypatch.setattr(Config, "SIGN_ORACLE_MAX_UNKNOWNS", 3)
        with pytest.raises(CapExceededError):
            brute_force_signs(table1)
