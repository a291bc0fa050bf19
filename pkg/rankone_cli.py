"""
rankone - Command-line application
Decides, enumerates and fits rank-one completions of partially observed tensors.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO, Tuple

import numpy as np

from core import __version__
from core.constants import MODE_LETTERS
from core.enums import ExitCode, Field
from core.exceptions import (
    CapExceededError,
    FitException,
    InexactPhaseError,
    RankOneException,
    TensorFormatException,
)
from core.logging_config import RankOneLogger, get_logger
from models.factors import RankOneFactors
from models.fit import NoiseSpec
from models.results import ComplexSolveResult, RealSolveResult
from models.tensor import ObservationPattern, PartialTensor
from operations import (
    analyze_pattern,
    brute_force_sigma,
    brute_force_signs,
    count_complex,
    fit_least_squares,
    generate_noisy,
    load_named_pattern,
    load_tensor,
    non_uniqueness_witness,
    rank_one_tensor,
    replicate_noise_experiment,
    serialize_json,
    solve_real,
    solution_violations,
    variable_labels,
    verify_exact_magnitudes,
)
from ui import (
    Report,
    ReportPrinter,
    complex_section,
    failure_reason,
    fit_section,
    pattern_section,
    provenance_section,
    real_section,
)
from ui.report import TOOL_NAME
from utils.helpers import format_rational, parse_factor_spec, parse_int_list

logger = get_logger()

NON_REAL_STATUS = "non_real_observations"
RANDOM_FACTOR_LOW = 0.5
RANDOM_FACTOR_HIGH = 2.0


class RankOneCLI(ReportPrinter):
    """Command-line front end"""

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.parser = self._setup_parser()

    def _setup_parser(self) -> argparse.ArgumentParser:
        """Setup the argument parser and its subcommands"""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("-v", "--verbose", action="count", default=0,
                            help="Log progress to stderr (-vv for debug output)")

        parser = argparse.ArgumentParser(
            prog="rankone",
            description="Existence, uniqueness and fitting of rank-one tensor completions",
        )
        parser.add_argument("--version", action="version", version=f"rankone {__version__}")
        commands = parser.add_subparsers(dest="command", required=True)

        analyze = commands.add_parser("analyze", parents=[common],
                                      help="Condition (A), real and complex solution counts")
        analyze.add_argument("input", help="Tensor file (.slices or .json)")
        self._add_field_argument(analyze)
        analyze.add_argument("--json", action="store_true", help="Emit the JSON report")

        solve = commands.add_parser("solve", parents=[common], help="List every rank-one completion")
        solve.add_argument("input", help="Tensor file (.slices or .json)")
        self._add_field_argument(solve)
        solve.add_argument("--limit", type=int, default=None, help="Print at most N solutions per field")
        solve.add_argument("--exact", action="store_true",
                           help="Also print magnitudes as products of observed magnitudes")
        solve.add_argument("--complete", action="store_true", help="Print the filled-in missing entries")
        solve.add_argument("--json", action="store_true", help="Emit the JSON report")

        fit = commands.add_parser("fit", parents=[common], help="Log-domain least-squares rank-one fit")
        fit.add_argument("input", help="Tensor file (.slices or .json)")
        fit.add_argument("--full", action="store_true", help="Print the reconstructed full tensor")
        fit.add_argument("--json", action="store_true", help="Emit the JSON report")

        generate = commands.add_parser("generate", parents=[common],
                                       help="Write a noisy observed rank-one tensor")
        self._add_generation_arguments(generate)
        generate.add_argument("-o", "--output", required=True, help="Output JSON file")

        oracle = commands.add_parser("oracle", parents=[common],
                                     help="Cross-check the solvers against exhaustive enumeration")
        oracle.add_argument("input", help="Tensor file (.slices or .json)")

        replicate = commands.add_parser("replicate", parents=[common],
                                        help="Repeat generate and fit over many seeds")
        self._add_generation_arguments(replicate)
        replicate.add_argument("--runs", type=int, default=100, help="Number of seeds")
        replicate.add_argument("--json", action="store_true", help="Emit the JSON summary")

        return parser

    def _add_field_argument(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--field", choices=[f.value for f in Field], default=Field.BOTH.value,
                            help="Field to complete over (default: both)")

    def _add_generation_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--dims", help="Mode sizes, e.g. 3,3,3")
        truth = parser.add_mutually_exclusive_group()
        truth.add_argument("--ones", action="store_true", help="All-ones true factors (default)")
        truth.add_argument("--factors", help="Explicit factors, e.g. '1,2;1,3;5,7'")
        truth.add_argument("--random-factors", action="store_true",
                           help=f"Factors uniform in [{RANDOM_FACTOR_LOW}, {RANDOM_FACTOR_HIGH})")
        where = parser.add_mutually_exclusive_group()
        where.add_argument("--pattern", help="Bundled table name or tensor file whose pattern is reused")
        where.add_argument("--density", type=float, help="Observe each entry with this probability")
        parser.add_argument("--amp", type=float, default=0.0, help="Noise amplitude")
        parser.add_argument("--seed", type=int, default=0, help="Seed of the pattern, factor and noise draws")

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse arguments, run one subcommand and map failures to exit codes

        Args:
            argv: Arguments without the program name (defaults to sys.argv[1:])

        Returns:
            int: Process exit code
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return int(e.code or 0)

        RankOneLogger().set_console_level(_console_level(args.verbose))
        handler = getattr(self, f"cmd_{args.command}")
        try:
            return int(handler(args))
        except (TensorFormatException, InexactPhaseError) as e:
            return self._fail(e, ExitCode.PARSE_ERROR)
        except CapExceededError as e:
            return self._fail(e, ExitCode.CAP_EXCEEDED)
        except FitException as e:
            return self._fail(e, ExitCode.FIT_PRECONDITION)
        except RankOneException as e:
            return self._fail(e, ExitCode.FAILURE)
        except ValueError as e:
            return self._fail(e, ExitCode.PARSE_ERROR)

    def _fail(self, error: Exception, code: ExitCode) -> int:
        logger.debug(f"{type(error).__name__}: {error}")
        self.stderr.write(f"error: {error}\n")
        return int(code)

    # Subcommands

    def cmd_analyze(self, args: argparse.Namespace) -> int:
        tensor = load_tensor(args.input)
        field = Field(args.field)
        pattern = analyze_pattern(tensor.pattern)
        real = self._real_or_none(tensor, field, materialize=False)
        complex_result = count_complex(tensor, materialize=False) if field.includes_complex() else None
        witness = self._witness(tensor, pattern.condition_a, complex_result)

        if args.json:
            report = Report(pattern_section(pattern), provenance_section(tensor))
            if field.includes_real():
                report.real = real_section(real) if real is not None else _non_real_section()
            if complex_result is not None:
                report.complex = complex_section(complex_result)
                report.complex["witness"] = witness
            self.emit(report.to_json())
            return ExitCode.SUCCESS

        self.print_input(tensor)
        self.print_pattern(pattern)
        if field.includes_real():
            if real is None:
                self.emit("Real: 0 solutions (observations are not real)")
            else:
                self.print_real_summary(real)
        if complex_result is not None:
            self.print_complex_summary(complex_result)
            if witness:
                shifts = ", ".join(f"{label} + {turns}" for label, turns in witness.items())
                self.emit(f"Non-uniqueness witness (phase shift in turns): {shifts}")
        return ExitCode.SUCCESS

    def cmd_solve(self, args: argparse.Namespace) -> int:
        tensor = load_tensor(args.input)
        field = Field(args.field)
        if args.limit is not None and args.limit < 0:
            raise ValueError(f"--limit must be nonnegative, got {args.limit}")
        observed = None
        if args.exact:
            if tensor.is_exact():
                observed = tensor.pattern.indices
            else:
                logger.warning("--exact needs exact observations; printing decimal magnitudes only")
        completion_tensor = tensor if args.complete else None

        real = self._real_or_none(tensor, field, materialize=True)
        complex_result = count_complex(tensor) if field.includes_complex() else None
        for result in (real, complex_result):
            if result is not None:
                self._check_solutions(tensor, result)

        failures = self._failures(field, real, complex_result)
        if args.json:
            report = Report(pattern_section(analyze_pattern(tensor.pattern)), provenance_section(tensor))
            if field.includes_real():
                report.real = (real_section(real, True, args.limit, observed) if real is not None
                               else _non_real_section())
            if complex_result is not None:
                report.complex = complex_section(complex_result, True, args.limit, observed)
            self.emit(report.to_json())
        else:
            self.print_input(tensor)
            if real is not None and real.has_solutions():
                self.print_solutions("Real", real.solutions, args.limit, observed, completion_tensor)
            if complex_result is not None and complex_result.has_solutions():
                self.print_solutions("Complex", complex_result.solutions, args.limit, observed,
                                     completion_tensor)

        requested = int(field.includes_real()) + int(field.includes_complex())
        for message in failures:
            self.stderr.write(f"{message}\n")
        if len(failures) == requested:
            return ExitCode.NO_SOLUTION
        return ExitCode.SUCCESS

    def cmd_fit(self, args: argparse.Namespace) -> int:
        tensor = load_tensor(args.input)
        fit = fit_least_squares(tensor)
        if args.json:
            report = Report(pattern_section(analyze_pattern(tensor.pattern)), provenance_section(tensor),
                            fit=fit_section(fit, args.full))
            self.emit(report.to_json())
            return ExitCode.SUCCESS
        self.print_input(tensor)
        self.print_fit(tensor, fit, args.full)
        return ExitCode.SUCCESS

    def cmd_generate(self, args: argparse.Namespace) -> int:
        rng = np.random.default_rng(args.seed)
        pattern = self._resolve_pattern(args, rng)
        components, exact = self._resolve_truth(args, pattern.dims, rng)
        truth = RankOneFactors.from_components(components)
        noise = NoiseSpec(args.amp, args.seed)

        if noise.amplitude == 0 and exact:
            tensor = rank_one_tensor(components, pattern)
        else:
            tensor = generate_noisy(truth, pattern, noise)

        output = Path(args.output)
        output.write_text(serialize_json(tensor) + "\n", encoding="utf-8")
        logger.info(f"Wrote {tensor.m()} {tensor.mode.value} observations to {output}")
        self.emit(f"Wrote {output} ({tensor.mode.value}, m = {tensor.m()}, amplitude {noise.amplitude}, "
                  f"seed {noise.seed})")
        self.emit("True factors:")
        self.print_factors(truth)
        return ExitCode.SUCCESS

    def cmd_oracle(self, args: argparse.Namespace) -> int:
        tensor = load_tensor(args.input)
        self.print_input(tensor)

        # Exhaustive side first: it enforces the cap before any other work
        brute_complex = brute_force_sigma(tensor)
        fast_complex = count_complex(tensor)
        mismatches: List[str] = []
        complex_count = fast_complex.solutions.count()
        if complex_count != brute_complex.count():
            mismatches.append(f"complex count {complex_count} (exact) vs {brute_complex.count()} (enumeration)")
        elif not fast_complex.solutions.is_truncated() and not fast_complex.solutions.same_phases(brute_complex):
            mismatches.append("complex solution phases differ between exact solver and enumeration")

        real_count = None
        if tensor.is_real():
            brute_real = brute_force_signs(tensor)
            fast_real = solve_real(tensor)
            real_count = fast_real.solutions.count()
            if real_count != brute_real.count():
                mismatches.append(f"real count {real_count} (GF(2)) vs {brute_real.count()} (sign search)")
            elif not fast_real.solutions.is_truncated() and not fast_real.solutions.same_phases(brute_real):
                mismatches.append("real solution signs differ between GF(2) solver and sign search")
            elif (not fast_real.solutions.is_truncated() and not fast_complex.solutions.is_truncated()
                  and fast_complex.solutions.real_solutions().phase_keys() != fast_real.solutions.phase_keys()):
                mismatches.append("real solutions are not the real members of the complex solutions")
        else:
            self.emit("Sign search skipped: observations are not real")

        if mismatches:
            for message in mismatches:
                self.emit(f"MISMATCH: {message}")
            return ExitCode.FAILURE
        if real_count is not None and real_count == complex_count:
            self.emit(f"MATCH: {_plural(complex_count, 'solution')}")
        else:
            if real_count is not None:
                self.emit(f"MATCH: {_plural(real_count, 'real solution')}")
            self.emit(f"MATCH: {_plural(complex_count, 'complex solution')}")
        return ExitCode.SUCCESS

    def cmd_replicate(self, args: argparse.Namespace) -> int:
        if args.runs < 1:
            raise ValueError(f"--runs must be positive, got {args.runs}")
        rng = np.random.default_rng(args.seed)
        pattern = self._resolve_pattern(args, rng)
        components, _ = self._resolve_truth(args, pattern.dims, rng)
        seeds = range(args.seed, args.seed + args.runs)
        summary = replicate_noise_experiment(components, pattern, args.amp, seeds)
        if args.json:
            report = Report(pattern_section(analyze_pattern(pattern)), {
                "input": pattern.source, "mode": "generated", "dims": list(pattern.dims),
                "tool": TOOL_NAME, "version": __version__,
            }, extra={"replication": {
                "amplitude": summary.amplitude,
                "runs": summary.runs,
                "median_entry_error": summary.median_entry_error,
                "max_entry_error": summary.max_entry_error,
                "median_factor_error": summary.median_factor_error,
            }})
            self.emit(report.to_json())
            return ExitCode.SUCCESS
        self.print_replication(summary)
        return ExitCode.SUCCESS

    # Shared steps

    def _real_or_none(self, tensor: PartialTensor, field: Field, materialize: bool) -> Optional[RealSolveResult]:
        if not field.includes_real():
            return None
        if not tensor.is_real():
            logger.info("Observations are not all real; no real completion exists")
            return None
        return solve_real(tensor, materialize=materialize)

    def _witness(self, tensor: PartialTensor, condition_a: bool,
                 complex_result: Optional[ComplexSolveResult]) -> Optional[Dict[str, str]]:
        if complex_result is None or not condition_a or complex_result.count in (0, 1):
            return None
        shift = non_uniqueness_witness(tensor)
        if shift is None:
            return None
        labels = variable_labels(tensor.dims)
        return {
            f"{MODE_LETTERS[mode - 1]}{index}": format_rational(turns)
            for (mode, index), turns in zip(labels, shift) if turns
        }

    def _check_solutions(self, tensor: PartialTensor, result) -> None:
        """Re-check listed solutions against the observations"""
        for factors in result.solutions:
            violations = solution_violations(tensor, factors)
            if violations:
                logger.warning(f"Solution fails to reproduce {len(violations)} observations, "
                               f"first at {violations[0]}")
            elif tensor.is_exact() and not verify_exact_magnitudes(tensor, factors):
                logger.warning("Solution exponent vectors do not reproduce the observed magnitudes")

    def _failures(self, field: Field, real: Optional[RealSolveResult],
                  complex_result: Optional[ComplexSolveResult]) -> List[str]:
        failures = []
        if field.includes_real():
            if real is None:
                failures.append("no real rank-one completion (observations are not real)")
            elif not real.has_solutions():
                failures.append(f"no real rank-one completion ({failure_reason(real.status.value)})")
        if complex_result is not None and not complex_result.has_solutions():
            failures.append(f"no complex rank-one completion ({failure_reason(complex_result.status.value)})")
        return failures

    def _resolve_pattern(self, args: argparse.Namespace, rng: np.random.Generator) -> ObservationPattern:
        dims = parse_int_list(args.dims) if args.dims else None
        if args.pattern:
            pattern = load_named_pattern(args.pattern).pattern
            if dims is not None and dims != pattern.dims:
                raise ValueError(f"--dims {dims} differ from the dims {pattern.dims} of {args.pattern}")
            return pattern
        if dims is None and args.factors:
            dims = tuple(len(vector) for vector in parse_factor_spec(args.factors))
        if dims is None:
            raise ValueError("--dims is required unless --pattern or --factors gives them")
        if args.density is not None:
            if not 0 < args.density <= 1:
                raise ValueError(f"--density must lie in (0, 1], got {args.density}")
            mask = rng.random(dims) < args.density
            indices = [tuple(int(i) + 1 for i in index) for index in np.argwhere(mask)]
            return ObservationPattern(dims, tuple(indices), source=f"density {args.density}, seed {args.seed}")
        full = [tuple(int(i) + 1 for i in index) for index in np.ndindex(*dims)]
        return ObservationPattern(dims, tuple(full), source="full")

    def _resolve_truth(self, args: argparse.Namespace, dims: Tuple[int, ...],
                       rng: np.random.Generator) -> Tuple[list, bool]:
        """True factor components and whether they are exact rationals"""
        if args.factors:
            components = parse_factor_spec(args.factors)
            if tuple(len(vector) for vector in components) != dims:
                raise ValueError(f"--factors lengths do not match dims {dims}")
            return [list(vector) for vector in components], True
        if args.random_factors:
            return [rng.uniform(RANDOM_FACTOR_LOW, RANDOM_FACTOR_HIGH, n).tolist() for n in dims], False
        return [[Fraction(1)] * n for n in dims], True


def _console_level(verbosity: int) -> int:
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    return logging.WARNING


def _plural(count, noun: str) -> str:
    return f"{count} {noun}" if count == 1 else f"{count} {noun}s"


def _non_real_section() -> dict:
    return {"status": NON_REAL_STATUS, "count": 0}
