"""
Design matrix and pattern report models
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from linalg.gf2 import Gf2Matrix
from linalg.rational import RationalMatrix
from models.tensor import MultiIndex

# (mode, index), both 1-based
VariableLabel = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class DesignMatrix:
    """
    0/1 incidence matrix of the log-linear system of a pattern.

    Row e has a 1 in the column of every unpinned variable x^(k)_{i_k} of
    observation e. The pinned variables are index 1 of modes 1..d−1.

    Attributes:
        matrix: m × unknowns integer array
        column_labels: (mode, index) of each column, mode-major
        row_labels: Observation of each row, lexicographic
        dims: Tensor dims
    """
    matrix: np.ndarray
    column_labels: Tuple[VariableLabel, ...]
    row_labels: Tuple[MultiIndex, ...]
    dims: Tuple[int, ...]
    _columns: Dict[VariableLabel, int] = field(init=False, repr=False)

    def __post_init__(self):
        if self.matrix.shape != (len(self.row_labels), len(self.column_labels)):
            raise ValueError(f"Design matrix shape {self.matrix.shape} does not match its labels")
        object.__setattr__(self, "_columns", {label: j for j, label in enumerate(self.column_labels)})

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_cols(self) -> int:
        return self.matrix.shape[1]

    def column_of(self, mode: int, index: int) -> Optional[int]:
        """Column of variable x^(mode)_index, or None for a pinned variable"""
        return self._columns.get((mode, index))

    def is_pinned(self, mode: int, index: int) -> bool:
        return mode < len(self.dims) and index == 1

    def to_rational(self) -> RationalMatrix:
        return RationalMatrix.from_array(self.matrix)

    def to_gf2(self) -> Gf2Matrix:
        return Gf2Matrix.from_dense(self.matrix)

    def to_float(self) -> np.ndarray:
        return self.matrix.astype(float)

    def __repr__(self) -> str:
        return f"DesignMatrix({self.n_rows}x{self.n_cols})"


@dataclass(frozen=True)
class PatternReport:
    """
    Local uniqueness analysis of an observation pattern.

    Attributes:
        m: Number of observations
        unknowns: Σn_k − (d−1)
        rank: Exact rank of the design matrix
        condition_a: Whether the homogeneous system has only the zero solution
        dof: unknowns − rank
        overdetermined: unknowns < m
        components: Connected components of the (mode, index) incidence graph
        unobserved: (mode, index) pairs that no observation touches
    """
    m: int
    unknowns: int
    rank: int
    condition_a: bool
    dof: int
    overdetermined: bool
    components: int = 1
    unobserved: Tuple[VariableLabel, ...] = ()

    def __post_init__(self):
        """Validate the report invariants"""
        if self.dof != self.unknowns - self.rank or self.dof < 0:
            raise ValueError(f"Inconsistent dof {self.dof} for rank {self.rank} and {self.unknowns} unknowns")
        if self.condition_a != (self.rank == self.unknowns):
            raise ValueError("condition_a must hold exactly when the rank equals the unknowns")

    @property
    def shape(self) -> Tuple[int, int]:
        return self.m, self.unknowns

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "unknowns": self.unknowns,
            "rank": self.rank,
            "condition_a": self.condition_a,
            "dof": self.dof,
            "overdetermined": self.overdetermined,
            "components": self.components,
            "unobserved": [list(label) for label in self.unobserved],
        }
