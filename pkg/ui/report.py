"""
Machine-readable analysis reports
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

from core import __version__
from models.design import PatternReport
from models.factors import RankOneFactors
from models.fit import FitResult
from models.results import ComplexSolveResult, MagnitudeSolution, RealSolveResult
from models.solutions import SolutionSet
from models.tensor import MultiIndex, PartialTensor
from utils.helpers import canonical_json, format_index

TOOL_NAME = "rankone"


@dataclass
class Report:
    """
    Result document of one command-line run.

    Every section is a plain dict of JSON-compatible values; missing
    sections are rendered as null. The rendering is key-sorted and uses
    fixed float precision, so identical inputs give byte-identical output.

    Attributes:
        pattern: Pattern analysis section
        real: Real completion section
        complex: Complex completion section
        fit: Least-squares fit section
        provenance: Input file name, value mode and tool version
    """
    pattern: Dict[str, Any]
    provenance: Dict[str, Any]
    real: Optional[Dict[str, Any]] = None
    complex: Optional[Dict[str, Any]] = None
    fit: Optional[Dict[str, Any]] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        document = {
            "pattern": self.pattern,
            "real": self.real,
            "complex": self.complex,
            "fit": self.fit,
            "provenance": self.provenance,
        }
        document.update(self.extra)
        return document

    def to_json(self) -> str:
        return canonical_json(self.to_dict())


def provenance_section(tensor: PartialTensor) -> Dict[str, Any]:
    """Input name, value mode and tool version (no timestamps)"""
    return {
        "input": tensor.pattern.source,
        "mode": tensor.mode.value,
        "dims": list(tensor.dims),
        "tool": TOOL_NAME,
        "version": __version__,
    }


def pattern_section(report: PatternReport) -> Dict[str, Any]:
    section = report.to_dict()
    section["design_shape"] = list(report.shape)
    return section


def _magnitude_section(magnitude: MagnitudeSolution) -> Dict[str, Any]:
    return {
        "consistent": magnitude.consistent,
        "method": magnitude.method,
        "kernel_dimension": magnitude.family_dimension,
        "certificate": list(magnitude.certificate) if magnitude.certificate is not None else None,
    }


def factors_to_dict(factors: RankOneFactors, observed: Optional[Sequence[MultiIndex]] = None) -> Dict[str, Any]:
    """
    One solution as JSON-ready vectors.

    Args:
        factors: Solution
        observed: Row labels; when given, exact exponent forms are keyed by index
    """
    vectors = []
    for vector in factors.vectors:
        entries = []
        for entry in vector:
            item = {"magnitude": entry.magnitude, "phase_turns": entry.phase_turns}
            if observed is not None and entry.exponents is not None:
                item["exponents"] = {
                    format_index(index): r for index, r in zip(observed, entry.exponents) if r
                }
            entries.append(item)
        vectors.append(entries)
    return {"vectors": vectors}


def _solutions_section(solutions: SolutionSet, limit: Optional[int],
                       observed: Optional[Sequence[MultiIndex]]) -> Dict[str, Any]:
    listed = solutions.get_all_solutions()
    if limit is not None:
        listed = listed[:limit]
    return {
        "listed": len(listed),
        "truncated": solutions.is_truncated() or len(listed) < len(solutions),
        "items": [factors_to_dict(s, observed) for s in listed],
    }


def real_section(result: RealSolveResult, include_solutions: bool = False, limit: Optional[int] = None,
                 observed: Optional[Sequence[MultiIndex]] = None) -> Dict[str, Any]:
    """
    Summary of a real completion analysis.

    Args:
        result: Outcome of solve_real
        include_solutions: Also list the solutions
        limit: Maximum number of listed solutions
        observed: Row labels for exact exponent forms
    """
    section = {
        "status": result.status.value,
        "count": result.count,
        "gf2_kernel_dimension": result.kernel_dimension,
        "magnitude": _magnitude_section(result.magnitude),
    }
    if include_solutions:
        section["solutions"] = _solutions_section(result.solutions, limit, observed)
    return section


def complex_section(result: ComplexSolveResult, include_solutions: bool = False, limit: Optional[int] = None,
                    observed: Optional[Sequence[MultiIndex]] = None) -> Dict[str, Any]:
    """Summary of a complex completion analysis; see real_section"""
    phases = result.phases
    section = {
        "status": result.status.value,
        "count": result.count,
        "divisors": [int(d) for d in result.divisors],
        "phase_free_dimension": phases.free_dimension if phases is not None else None,
        "magnitude": _magnitude_section(result.magnitude),
    }
    if include_solutions:
        section["solutions"] = _solutions_section(result.solutions, limit, observed)
    return section


def fit_section(fit: FitResult, full: bool = False) -> Dict[str, Any]:
    section = {
        "objective": fit.objective,
        "gradient_norm": fit.gradient_norm,
        "max_abs_residual": fit.max_abs_residual(),
        "factors": factors_to_dict(fit.factors)["vectors"],
        "residuals": {format_index(index): r for index, r in fit.residuals.items()},
        "relative_disturbance": {
            format_index(index): r for index, r in fit.relative_disturbance_estimates.items()
        },
    }
    if full:
        section["full"] = {
            format_index(index): value.magnitude for index, value in fit.factors.complete().items()
        }
    return section
