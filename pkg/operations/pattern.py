"""
Design matrices and local uniqueness of observation patterns
"""

from typing import List, Tuple

import numpy as np
import scipy.sparse as ss
from scipy.sparse.csgraph import connected_components

from core.logging_config import get_logger, log_performance
from linalg.rational import rational_rank
from models.design import DesignMatrix, PatternReport, VariableLabel
from models.tensor import ObservationPattern

logger = get_logger()


def variable_labels(dims: Tuple[int, ...]) -> List[VariableLabel]:
    """
    Unpinned variables in column order.

    Modes come first, then indices; index 1 of modes 1..d−1 is pinned.
    """
    d = len(dims)
    return [(k, i) for k, n in enumerate(dims, start=1) for i in range(1, n + 1)
            if not (k < d and i == 1)]


def build_design_matrix(pattern: ObservationPattern) -> DesignMatrix:
    """
    Incidence matrix of the log-linear system of a pattern.

    Args:
        pattern: Observation pattern

    Returns:
        DesignMatrix: m × (Σn_k − (d−1)) 0/1 matrix, rows in lexicographic order

    Example:
        >>> build_design_matrix(ObservationPattern((1, 1, 1), ((1, 1, 1),))).matrix.tolist()
        [[1]]
    """
    dims = pattern.dims
    d = len(dims)
    labels = variable_labels(dims)
    matrix = np.zeros((pattern.m(), len(labels)), dtype=np.int64)
    coordinates = pattern.index_array()
    rows = np.arange(pattern.m())

    offset = 0
    for k, n in enumerate(dims):
        column = coordinates[:, k]
        if k < d - 1:
            observed = column > 0
            matrix[rows[observed], offset + column[observed] - 1] = 1
            offset += n - 1
        else:
            matrix[rows, offset + column] = 1
            offset += n

    return DesignMatrix(matrix, tuple(labels), pattern.indices, dims)


def pattern_components(pattern: ObservationPattern) -> Tuple[int, Tuple[VariableLabel, ...]]:
    """
    Connected components of the pattern's incidence hypergraph.

    Vertices are the (mode, index) pairs and every observation joins its d
    vertices. Vertices no observation touches are reported separately and
    not counted as components.

    Returns:
        tuple: (number of components among observed vertices, unobserved vertices)
    """
    dims = pattern.dims
    offsets = np.concatenate(([0], np.cumsum(dims)[:-1]))
    vertices = pattern.index_array() + offsets
    n_vertices = int(sum(dims))

    # Star edges from the first vertex of each observation
    heads = np.repeat(vertices[:, 0], pattern.order - 1)
    tails = vertices[:, 1:].ravel()
    graph = ss.coo_matrix((np.ones(heads.size, dtype=np.int8), (heads, tails)),
                          shape=(n_vertices, n_vertices)).tocsr()
    _, labels = connected_components(graph, directed=False)

    touched = np.zeros(n_vertices, dtype=bool)
    touched[vertices.ravel()] = True
    components = int(np.unique(labels[touched]).size)
    unobserved = tuple(
        (k + 1, int(v - offsets[k]) + 1)
        for v in np.flatnonzero(~touched)
        for k in [int(np.searchsorted(offsets, v, side="right")) - 1]
    )
    return components, unobserved


@log_performance
def analyze_pattern(pattern: ObservationPattern) -> PatternReport:
    """
    Decide condition (A): the homogeneous log-linear system has only the zero solution.

    Condition (A) is equivalent to local uniqueness of a rank-one completion.
    The rank is computed exactly.

    Args:
        pattern: Observation pattern

    Returns:
        PatternReport: rank, dof and condition (A)

    Example:
        >>> analyze_pattern(ObservationPattern((2, 2, 2), ((1, 1, 1),))).dof
        3
    """
    design = build_design_matrix(pattern)
    rank = rational_rank(design.matrix)
    unknowns = design.n_cols
    components, unobserved = pattern_components(pattern)
    report = PatternReport(
        m=pattern.m(),
        unknowns=unknowns,
        rank=rank,
        condition_a=rank == unknowns,
        dof=unknowns - rank,
        overdetermined=unknowns < pattern.m(),
        components=components,
        unobserved=unobserved,
    )
    logger.info(f"Pattern {pattern.dims} with m={report.m}: rank {rank}/{unknowns}, "
                f"condition (A) {'holds' if report.condition_a else 'fails'}")
    return report
