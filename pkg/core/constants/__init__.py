"""
Constants package for rankone

This package organizes constants by domain for better maintainability.
All constants are re-exported here.
"""

# Numeric constants
from core.constants.numeric import (
    MODULAR_RANK_PRIME,
    FLOAT_CONSISTENCY_RTOL,
    GRADIENT_RTOL,
    SOLUTION_MAGNITUDE_RTOL,
    PHASE_SNAP_TOLERANCE,
    MAX_PHASE_DENOMINATOR,
    UNIFORM_MANTISSA_BITS,
)

# Limits
from core.constants.limits import (
    DEFAULT_ORACLE_CAP,
    DEFAULT_SIGN_ORACLE_MAX_UNKNOWNS,
    DEFAULT_REAL_ENUMERATION_MAX_KERNEL,
    DEFAULT_COMPLEX_MATERIALIZATION_CAP,
    DEFAULT_CERTIFICATE_MAX_ROWS,
    ORACLE_CHUNK_SIZE,
    MAX_ORACLE_LIFTS,
)

# Formatting constants
from core.constants.formatting import (
    FLOAT_SIGNIFICANT_DIGITS,
    INFINITE_LABEL,
    JSON_INDENT,
    MISSING_CELL,
    SLICE_SEPARATOR,
    CELL_SEPARATOR,
    COMMENT_PREFIX,
    PHASE_MARKER,
    MODE_LETTERS,
)

__all__ = [
    # Numeric
    'MODULAR_RANK_PRIME',
    'FLOAT_CONSISTENCY_RTOL',
    'GRADIENT_RTOL',
    'SOLUTION_MAGNITUDE_RTOL',
    'PHASE_SNAP_TOLERANCE',
    'MAX_PHASE_DENOMINATOR',
    'UNIFORM_MANTISSA_BITS',
    # Limits
    'DEFAULT_ORACLE_CAP',
    'DEFAULT_SIGN_ORACLE_MAX_UNKNOWNS',
    'DEFAULT_REAL_ENUMERATION_MAX_KERNEL',
    'DEFAULT_COMPLEX_MATERIALIZATION_CAP',
    'DEFAULT_CERTIFICATE_MAX_ROWS',
    'ORACLE_CHUNK_SIZE',
    'MAX_ORACLE_LIFTS',
    # Formatting
    'FLOAT_SIGNIFICANT_DIGITS',
    'INFINITE_LABEL',
    'JSON_INDENT',
    'MISSING_CELL',
    'SLICE_SEPARATOR',
    'CELL_SEPARATOR',
    'COMMENT_PREFIX',
    'PHASE_MARKER',
    'MODE_LETTERS',
]
