"""
Comprehensive import test for rankone
"""


def test_imports():
    print("Testing imports...")

    # Test core imports
    print("✓ Testing core imports...")
    from core.enums import ValueMode, Field, ExitCode
    from core.constants import MODULAR_RANK_PRIME, INFINITE_LABEL, ORACLE_CHUNK_SIZE
    from core.config import Config
    from core.exceptions import RankOneException, TensorFormatException
    from core.logging_config import get_logger, log_performance
    print("  ✓ core.enums")
    print("  ✓ core.constants")
    print("  ✓ core.config")

    # Test model imports
    print("✓ Testing model imports...")
    from models import PartialTensor, ObservationPattern, RankOneFactors, SolutionSet
    from models.scalars import PolarScalar, FloatPolar
    print("  ✓ models package")
    print("  ✓ models.scalars")

    # Test linalg imports
    print("✓ Testing linalg imports...")
    from linalg import gf2_solve, rational_solve, integer_smith
    print("  ✓ linalg")

    # Test operations imports
    print("✓ Testing operations imports...")
    from operations import analyze_pattern, solve_real, count_complex, fit_least_squares
    print("  ✓ operations")

    # Test UI imports
    print("✓ Testing UI imports...")
    from ui import ReportPrinter, Report
    print("  ✓ ui")

    # Test utils imports
    print("✓ Testing utils imports...")
    from utils.helpers import parse_rational_literal, canonical_json
    from utils.number_theory import coprime_base, power_product_is_one
    print("  ✓ utils")

    # Test main application
    print("✓ Testing main application...")
    from rankone_cli import RankOneCLI
    from main import main
    print("  ✓ rankone_cli")
    print("  ✓ main")

    assert issubclass(RankOneCLI, ReportPrinter)
    assert issubclass(TensorFormatException, RankOneException)
    print("\n" + "=" * 50)
    print("✅ ALL IMPORTS SUCCESSFUL!")
    print("=" * 50)
