"""
Application configuration and settings
Contains runtime configurable settings (as opposed to core/constants which has fixed values)
"""

import os
from pathlib import Path
from typing import Optional

from core.constants import (
    DEFAULT_ORACLE_CAP,
    DEFAULT_SIGN_ORACLE_MAX_UNKNOWNS,
    DEFAULT_REAL_ENUMERATION_MAX_KERNEL,
    DEFAULT_COMPLEX_MATERIALIZATION_CAP,
    DEFAULT_CERTIFICATE_MAX_ROWS,
)
from core.exceptions import InvalidConfigError


class Config:
    """Application configuration settings"""

    # Brute-force caps
    ORACLE_CAP = DEFAULT_ORACLE_CAP
    ORACLE_CAP_ENV = "RANKONE_ORACLE_CAP"
    SIGN_ORACLE_MAX_UNKNOWNS = DEFAULT_SIGN_ORACLE_MAX_UNKNOWNS

    # Materialization caps
    REAL_ENUMERATION_MAX_KERNEL = DEFAULT_REAL_ENUMERATION_MAX_KERNEL
    COMPLEX_MATERIALIZATION_CAP = DEFAULT_COMPLEX_MATERIALIZATION_CAP

    # Magnitude consistency: left-kernel certificates up to this many observations
    CERTIFICATE_MAX_ROWS = DEFAULT_CERTIFICATE_MAX_ROWS

    # Logging
    LOG_DIR_ENV = "RANKONE_LOG_DIR"

    # Re-check every Smith decomposition (tests switch this on)
    VERIFY_DECOMPOSITIONS = os.environ.get("RANKONE_VERIFY", "") not in ("", "0")

    # Debug mode
    DEBUG = False

    @classmethod
    def oracle_cap(cls) -> int:
        """
        Get the maximum number of observations accepted by the sigma oracle.

        The environment variable RANKONE_ORACLE_CAP overrides the default.

        Returns:
            Positive integer cap

        Raises:
            InvalidConfigError: If the environment value is not a positive integer
        """
        raw = os.environ.get(cls.ORACLE_CAP_ENV)
        if raw is None or raw.strip() == "":
            return cls.ORACLE_CAP
        try:
            value = int(raw)
        except ValueError:
            raise InvalidConfigError(cls.ORACLE_CAP_ENV, f"expected an integer, got {raw!r}")
        if value <= 0:
            raise InvalidConfigError(cls.ORACLE_CAP_ENV, f"must be positive, got {value}")
        return value

    @classmethod
    def tables_dir(cls) -> Path:
        """Directory holding the bundled example tensors"""
        return Path(__file__).resolve().parent.parent / "resources" / "tables"

    @classmethod
    def log_dir(cls) -> Optional[str]:
        """Directory for the detailed log file, or None when file logging is off"""
        raw = os.environ.get(cls.LOG_DIR_ENV)
        return raw if raw else None
