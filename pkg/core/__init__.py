"""
Core package for rankone
Contains enums, constants, configuration, logging and the exception hierarchy
"""

__version__ = "1.0.0"
