"""
Shared fixtures: bundled example tensors and random instance builders
"""

from fractions import Fraction
from typing import Sequence

import numpy as np
import pytest

from core.config import Config
from models.scalars import PolarScalar
from models.tensor import ObservationPattern, PartialTensor
from operations.tensor_io import load_named_pattern, load_tensor


@pytest.fixture(autouse=True, scope="session")
def verify_decompositions():
    """Every Smith decomposition made by the suite is re-checked exactly"""
    previous = Config.VERIFY_DECOMPOSITIONS
    Config.VERIFY_DECOMPOSITIONS = True
    yield
    Config.VERIFY_DECOMPOSITIONS = previous


@pytest.fixture
def table1() -> PartialTensor:
    return load_named_pattern("table1")


@pytest.fixture
def table2() -> PartialTensor:
    return load_named_pattern("table2")


@pytest.fixture
def table3() -> PartialTensor:
    return load_named_pattern("table3")


@pytest.fixture
def table4() -> PartialTensor:
    return load_named_pattern("table4")


@pytest.fixture
def table4_json() -> PartialTensor:
    return load_tensor(Config.tables_dir() / "table4.json")


@pytest.fixture
def table5() -> PartialTensor:
    return load_named_pattern("table5")


def random_pattern(rng: np.random.Generator, dims: Sequence[int], m: int) -> ObservationPattern:
    """m distinct observed indices drawn uniformly"""
    total = int(np.prod(dims))
    flat = rng.choice(total, size=min(m, total), replace=False)
    indices = [tuple(int(i) + 1 for i in np.unravel_index(f, dims)) for f in flat]
    return ObservationPattern(tuple(dims), tuple(indices))


def tensor_from_factors(pattern: ObservationPattern, magnitudes, phases) -> PartialTensor:
    """Exact observations of a rank-one tensor given exact components"""
    values = []
    for index in pattern.indices:
        magnitude = Fraction(1)
        phase = Fraction(0)
        for mags, turns, i in zip(magnitudes, phases, index):
            magnitude *= Fraction(mags[i - 1])
            phase += Fraction(turns[i - 1])
        values.append(PolarScalar(magnitude, phase))
    return PartialTensor(pattern, tuple(values))


def tensor_from_values(pattern: ObservationPattern, values) -> PartialTensor:
    return PartialTensor(pattern, tuple(values))
