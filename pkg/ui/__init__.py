"""
UI package for rankone
Contains the text printer mixin and the JSON report builders
"""

from .printing import ReportPrinter, failure_reason
from .report import (
    Report,
    complex_section,
    factors_to_dict,
    fit_section,
    pattern_section,
    provenance_section,
    real_section,
)

__all__ = [
    'ReportPrinter',
    'failure_reason',
    'Report',
    'complex_section',
    'factors_to_dict',
    'fit_section',
    'pattern_section',
    'provenance_section',
    'real_section',
]
