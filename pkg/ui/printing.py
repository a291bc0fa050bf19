"""
Human-readable output of analyses, solutions and fits
"""

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from core.constants import MODE_LETTERS, SLICE_SEPARATOR
from models.design import PatternReport
from models.factors import FactorEntry, RankOneFactors
from models.fit import FitResult, ReplicationSummary
from models.results import ComplexSolveResult, RealSolveResult
from models.solutions import SolutionSet
from models.tensor import MultiIndex, PartialTensor
from operations.noisy_fit import reconstruct_full
from utils.helpers import format_float, format_index, format_phase, format_rational


class ReportPrinter:
    """Mixin class for writing reports to the text stream `self.stdout`"""

    def emit(self, line: str = "") -> None:
        self.stdout.write(line + "\n")

    def print_input(self, tensor: PartialTensor) -> None:
        dims = "x".join(str(n) for n in tensor.dims)
        self.emit(f"Input: {tensor.pattern.source} ({tensor.mode.value}, dims {dims}, m = {tensor.m()})")

    def print_pattern(self, report: PatternReport) -> None:
        """
        Print the pattern section

        Args:
            report: Outcome of analyze_pattern
        """
        self.emit(f"Design matrix: {report.m} x {report.unknowns}, rank {report.rank}, dof {report.dof}")
        self.emit(f"Condition (A): {'true' if report.condition_a else 'false'}")
        unobserved = ", ".join(f"{MODE_LETTERS[k - 1]}{i}" for k, i in report.unobserved) or "none"
        self.emit(f"Components: {report.components}, unobserved components: {unobserved}")

    def print_real_summary(self, result: RealSolveResult) -> None:
        if not result.has_solutions():
            self.emit(f"Real: 0 solutions ({failure_reason(result.status.value)})")
            return
        self.emit(f"Real: {_count_text(result.count)} (GF(2) kernel dimension {result.kernel_dimension})")

    def print_complex_summary(self, result: ComplexSolveResult) -> None:
        divisors = ",".join(str(d) for d in result.divisors) or "-"
        if not result.has_solutions():
            self.emit(f"Complex: 0 solutions ({failure_reason(result.status.value)})")
        else:
            self.emit(f"Complex: {_count_text(result.count)}")
        self.emit(f"Elementary divisors: {divisors}")
        certificate = result.magnitude.certificate
        if certificate is not None:
            self.emit(f"Violated certificate: {list(certificate)}")

    def print_solutions(self, title: str, solutions: SolutionSet, limit: Optional[int] = None,
                        observed: Optional[Sequence[MultiIndex]] = None,
                        tensor: Optional[PartialTensor] = None) -> None:
        """
        Print listed solutions in canonical order

        Args:
            title: Heading, e.g. "Real"
            solutions: Solutions to print
            limit: Maximum number of solutions to print
            observed: Row labels, printed with exact exponent forms when given
            tensor: When given, the missing entries implied by each solution are printed
        """
        listed = solutions.get_all_solutions()
        shown = listed if limit is None else listed[:limit]
        self.emit(f"{title} solutions: {_count_text(solutions.count())}, listing {len(shown)}")
        for number, factors in enumerate(shown, start=1):
            self.emit(f"Solution {number}:")
            self.print_factors(factors, observed)
            if tensor is not None:
                self.print_completion(tensor, factors)
        if solutions.is_truncated() or len(shown) < len(listed):
            self.emit("(more solutions exist than are listed)")

    def print_factors(self, factors: RankOneFactors, observed: Optional[Sequence[MultiIndex]] = None) -> None:
        for k, vector in enumerate(factors.vectors):
            letter = MODE_LETTERS[k]
            for i, entry in enumerate(vector, start=1):
                self.emit(f"  {letter}{i} = {_entry_text(entry, observed)}")

    def print_completion(self, tensor: PartialTensor, factors: RankOneFactors) -> None:
        """Print the values the solution assigns to the unobserved entries"""
        self.emit("  completed entries:")
        for index, value in factors.complete(tensor.dims).items():
            if index in tensor.pattern:
                continue
            phase = value.phase_turns
            self.emit(f"    {format_index(index)} = {format_float(value.magnitude)}"
                      f" · {format_phase(phase)}")

    def print_fit(self, tensor: PartialTensor, fit: FitResult, full: bool = False) -> None:
        """
        Print fitted factors, objective and the residual table

        Args:
            tensor: Fitted observations
            fit: Outcome of fit_least_squares
            full: Also print the reconstructed full tensor
        """
        self.emit("Fitted factors:")
        for k, magnitudes in enumerate(fit.factors.magnitudes()):
            self.emit(f"  {MODE_LETTERS[k]} = ({', '.join(f'{x:.4f}' for x in magnitudes)})")
        self.emit(f"Objective: {format_float(fit.objective)}")
        self.emit(f"Gradient norm: {fit.gradient_norm:.3e}")
        self.emit("Residuals:")
        self.emit(f"  {'index':<12}{'observed':>12}{'fitted':>12}{'log resid':>14}{'rel. dist.':>14}")
        for index, value in tensor.items():
            fitted = fit.factors.evaluate(index).magnitude
            self.emit(f"  {format_index(index):<12}{float(value.magnitude):>12.4f}{fitted:>12.4f}"
                      f"{fit.residuals[index]:>14.3e}{fit.relative_disturbance_estimates[index]:>14.3e}")
        if full:
            self.emit("Reconstructed tensor:")
            self.print_grid(reconstruct_full(fit.factors))

    def print_grid(self, grid: np.ndarray) -> None:
        """
        Print a dense 3-way tensor in slice layout (rows i, slices k, columns j);
        other orders are printed one entry per line.
        """
        if grid.ndim != 3:
            for index in np.ndindex(grid.shape):
                self.emit(f"  {format_index([i + 1 for i in index])} = {grid[index]:.4f}")
            return
        for i in range(grid.shape[0]):
            slices = []
            for k in range(grid.shape[2]):
                slices.append(" ".join(f"{grid[i, j, k]:.4f}" for j in range(grid.shape[1])))
            self.emit("  " + f" {SLICE_SEPARATOR} ".join(slices))

    def print_replication(self, summary: ReplicationSummary) -> None:
        self.emit(f"Amplitude: {summary.amplitude}")
        self.emit(f"Runs: {summary.runs}")
        self.emit(f"Median max relative entry error: {summary.median_entry_error:.6f}")
        self.emit(f"Worst max relative entry error: {summary.max_entry_error:.6f}")
        self.emit(f"Median max relative factor error: {summary.median_factor_error:.6f}")


def _count_text(count) -> str:
    if count == 1:
        return "1 solution"
    return f"{count} solutions"


def failure_reason(status: str) -> str:
    if status.endswith("magnitude"):
        return "magnitude system inconsistent"
    if status.endswith("sign"):
        return "sign system inconsistent"
    return "phase system inconsistent"


def _entry_text(entry: FactorEntry, observed: Optional[Sequence[MultiIndex]]) -> str:
    text = format_float(entry.magnitude)
    if entry.phase_turns != 0:
        text += f" · {format_phase(entry.phase_turns)}  (phase {format_rational(entry.phase_turns)} turns)"
    if observed is not None and entry.exponents is not None:
        text += f"  [{_exponent_form(entry.exponents, observed)}]"
    return text


def _exponent_form(exponents: Sequence[Fraction], observed: Sequence[MultiIndex]) -> str:
    """Exact magnitude as a product of observed magnitudes, e.g. |Q(1,1,1)|^(1/2)"""
    factors = []
    for index, r in zip(observed, exponents):
        if r == 0:
            continue
        power = "" if r == 1 else f"^({format_rational(r)})"
        factors.append(f"|Q{format_index(index)}|{power}")
    return " · ".join(factors) if factors else "1"
