"""
Utilities package for rankone
Contains literal parsing, formatting and number-theoretic helpers
"""

from utils.helpers import (
    parse_rational_literal,
    normalize_turns,
    snap_turns,
    format_rational,
    format_float,
    format_number,
    format_phase,
    format_index,
    canonical_json,
)
from utils.number_theory import (
    common_denominator,
    integerize,
    coprime_base,
    base_exponents,
    exponent_table,
    power_product_is_one,
)

__all__ = [
    'parse_rational_literal',
    'normalize_turns',
    'snap_turns',
    'format_rational',
    'format_float',
    'format_number',
    'format_phase',
    'format_index',
    'canonical_json',
    'common_denominator',
    'integerize',
    'coprime_base',
    'base_exponents',
    'exponent_table',
    'power_product_is_one',
]
