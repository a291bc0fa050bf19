"""
Custom exceptions for rankone
"""

from typing import Sequence


class RankOneException(Exception):
    """
    Base exception for all rankone errors.

    All custom exceptions in the application inherit from this class,
    making it easy to catch any application-specific error.
    """
    pass


# Tensor input exceptions

class TensorFormatException(RankOneException):
    """Base exception for malformed tensor input"""
    pass


class TensorParseError(TensorFormatException):
    """Raised when a tensor description cannot be parsed"""
    def __init__(self, location: str, reason: str = ""):
        self.location = location
        self.reason = reason
        message = f"Cannot parse tensor at {location}"
        if reason:
            message += f" - {reason}"
        super().__init__(message)


class RaggedRowsError(TensorFormatException):
    """Raised when slice-text rows or slices do not have equal shapes"""
    def __init__(self, line: int, what: str, expected: int, actual: int):
        self.line = line
        self.what = what
        self.expected = expected
        self.actual = actual
        message = f"Ragged input on line {line}: expected {expected} {what}, got {actual}"
        super().__init__(message)


class NonzeroViolationError(TensorFormatException):
    """Raised when an observed value is zero"""
    def __init__(self, location: str):
        self.location = location
        message = f"Observed value at {location} is zero; observations must be nonzero"
        super().__init__(message)


class EmptyPatternError(TensorFormatException):
    """Raised when a tensor has no observed entries"""
    def __init__(self, source: str = ""):
        self.source = source
        message = "Observation pattern is empty"
        if source:
            message += f" in {source}"
        super().__init__(message)


class IndexOutOfRangeError(TensorFormatException):
    """Raised when a multi-index lies outside the tensor dimensions"""
    def __init__(self, index: Sequence[int], dims: Sequence[int]):
        self.index = tuple(index)
        self.dims = tuple(dims)
        message = f"Index {self.index} is outside dims {self.dims} (indices are 1-based)"
        super().__init__(message)


class DuplicateIndexError(TensorFormatException):
    """Raised when the same multi-index is observed twice"""
    def __init__(self, index: Sequence[int]):
        self.index = tuple(index)
        message = f"Index {self.index} is observed more than once"
        super().__init__(message)


# Linear algebra exceptions

class LinalgException(RankOneException):
    """Base exception for exact linear algebra errors"""
    pass


class DimensionMismatchError(LinalgException):
    """Raised when operand shapes do not agree"""
    def __init__(self, operation: str, expected: int, actual: int):
        self.operation = operation
        self.expected = expected
        self.actual = actual
        message = f"{operation}: expected length {expected}, got {actual}"
        super().__init__(message)


class DecompositionError(LinalgException):
    """Raised when a computed normal form fails its own invariants"""
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Decomposition check failed: {reason}")


# Solver exceptions

class SolverException(RankOneException):
    """Base exception for completion solver errors"""
    pass


class NonRealValueError(SolverException):
    """Raised when a real analysis meets a genuinely complex observation"""
    def __init__(self, index: Sequence[int], phase_turns):
        self.index = tuple(index)
        self.phase_turns = phase_turns
        message = f"Observation {self.index} has phase {phase_turns} turns; real analysis needs 0 or 1/2"
        super().__init__(message)


class InexactPhaseError(SolverException):
    """Raised when a float phase is not close to a rational number of turns"""
    def __init__(self, index: Sequence[int], phase_turns: float):
        self.index = tuple(index)
        self.phase_turns = phase_turns
        message = f"Phase {phase_turns!r} turns at {self.index} is not a recognisable rational"
        super().__init__(message)


class CapExceededError(SolverException):
    """Raised when an exhaustive enumeration would exceed its configured cap"""
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        message = f"{what}: size {size} exceeds cap {cap}"
        super().__init__(message)


class PreconditionError(SolverException):
    """Raised when an operation is called outside its precondition"""
    def __init__(self, operation: str, reason: str):
        self.operation = operation
        self.reason = reason
        message = f"Cannot perform {operation}: {reason}"
        super().__init__(message)


# Fitting exceptions

class FitException(RankOneException):
    """Base exception for noisy-fit errors"""
    pass


class NonPositiveValueError(FitException):
    """Raised when the log-domain fit meets a value that is not a positive real"""
    def __init__(self, index: Sequence[int]):
        self.index = tuple(index)
        message = f"Observation {self.index} is not a positive real number"
        super().__init__(message)


class ConditionAViolatedError(FitException):
    """Raised when the pattern leaves the log-linear system underdetermined"""
    def __init__(self, dof: int, rank: int, unknowns: int):
        self.dof = dof
        self.rank = rank
        self.unknowns = unknowns
        message = (f"Pattern is degenerate: rank {rank} < {unknowns} unknowns "
                   f"({dof} degrees of freedom); add observations")
        super().__init__(message)


class NoiseAmplitudeError(FitException):
    """Raised when the noise amplitude could make an observation nonpositive"""
    def __init__(self, amplitude: float, bound: float):
        self.amplitude = amplitude
        self.bound = bound
        message = f"Noise amplitude {amplitude} must be below the smallest true value {bound}"
        super().__init__(message)


# Configuration exceptions

class ConfigException(RankOneException):
    """Base exception for configuration errors"""
    pass


class InvalidConfigError(ConfigException):
    """Raised when configuration is invalid"""
    def __init__(self, config_key: str, reason: str):
        self.config_key = config_key
        self.reason = reason
        message = f"Invalid configuration for '{config_key}': {reason}"
        super().__init__(message)
