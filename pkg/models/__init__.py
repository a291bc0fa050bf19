"""
Models package for rankone
Contains scalar, tensor, factor, solution and result data models
"""

from models.scalars import Rational, PolarScalar, FloatPolar
from models.tensor import MultiIndex, ObservationPattern, PartialTensor
from models.factors import FactorEntry, RankOneFactors, evaluate, iter_indices
from models.solutions import SolutionSet
from models.design import DesignMatrix, PatternReport
from models.results import (
    MagnitudeSolution,
    SignSystem,
    RealSolveResult,
    PhaseSystem,
    PhaseSolution,
    ComplexSolveResult,
)
from models.fit import NoiseSpec, FitResult, FitQuality, ReplicationSummary

__all__ = [
    'Rational', 'PolarScalar', 'FloatPolar',
    'MultiIndex', 'ObservationPattern', 'PartialTensor',
    'FactorEntry', 'RankOneFactors', 'evaluate', 'iter_indices',
    'SolutionSet',
    'DesignMatrix', 'PatternReport',
    'MagnitudeSolution', 'SignSystem', 'RealSolveResult', 'PhaseSystem', 'PhaseSolution',
    'ComplexSolveResult',
    'NoiseSpec', 'FitResult', 'FitQuality', 'ReplicationSummary',
]
