"""
Input/output formatting constants
"""

# Reports
FLOAT_SIGNIFICANT_DIGITS = 12
INFINITE_LABEL = "infinite"
JSON_INDENT = 2

# Slice text
MISSING_CELL = "*"
SLICE_SEPARATOR = "|"
CELL_SEPARATOR = "&"
COMMENT_PREFIX = "#"
PHASE_MARKER = "@"

# Factor vectors are named a, b, c, ... in printed output
MODE_LETTERS = "abcdefghijklmnopqrstuvwxyz"
