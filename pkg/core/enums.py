"""
Core enumerations for rankone
"""

from enum import Enum, IntEnum


class ValueMode(Enum):
    """How observed values are stored"""
    EXACT = "exact"
    FLOAT = "float"


class Field(Enum):
    """Scalar field a completion is sought over"""
    REAL = "real"
    COMPLEX = "complex"
    BOTH = "both"

    def includes_real(self) -> bool:
        return self in (Field.REAL, Field.BOTH)

    def includes_complex(self) -> bool:
        return self in (Field.COMPLEX, Field.BOTH)


class Gf2Status(Enum):
    """Outcome of a GF(2) linear solve"""
    INCONSISTENT = "inconsistent"
    UNIQUE = "unique"
    AFFINE = "affine"


class LinearStatus(Enum):
    """Outcome of an exact rational linear solve"""
    INCONSISTENT = "inconsistent"
    UNIQUE = "unique"
    AFFINE = "affine"


class RealStatus(Enum):
    """Outcome of the real completion analysis"""
    NO_SOLUTION_MAGNITUDE = "no_solution_magnitude"
    NO_SOLUTION_SIGN = "no_solution_sign"
    SOLUTIONS = "solutions"


class ComplexStatus(Enum):
    """Outcome of the complex completion analysis"""
    NO_SOLUTION_MAGNITUDE = "no_solution_magnitude"
    NO_SOLUTION_PHASE = "no_solution_phase"
    SOLUTIONS = "solutions"


class ExitCode(IntEnum):
    """Process exit codes of the command-line front end"""
    SUCCESS = 0
    FAILURE = 1
    PARSE_ERROR = 2
    NO_SOLUTION = 3
    FIT_PRECONDITION = 4
    CAP_EXCEEDED = 5
