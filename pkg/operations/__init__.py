"""
Operations package
Contains tensor I/O, pattern analysis, the real and complex solvers,
solution verification and the noisy least-squares fit
"""

from operations.tensor_io import (
    parse_slice_text,
    parse_json,
    serialize_json,
    format_slice_text,
    load_tensor,
    load_named_pattern,
    bundled_tables,
)
from operations.pattern import variable_labels, build_design_matrix, pattern_components, analyze_pattern
from operations.real_solver import solve_magnitudes, build_sign_system, solve_real, brute_force_signs
from operations.complex_solver import (
    build_phase_system,
    solve_phase_system,
    count_complex,
    non_uniqueness_witness,
    brute_force_sigma,
)
from operations.verification import solution_violations, verify_solution, verify_exact_magnitudes
from operations.noisy_fit import (
    fit_least_squares,
    objective_value,
    uniform_noise,
    generate_noisy,
    rank_one_tensor,
    reconstruct_full,
    fit_quality,
    replicate_noise_experiment,
)

__all__ = [
    # Tensor I/O
    'parse_slice_text', 'parse_json', 'serialize_json', 'format_slice_text',
    'load_tensor', 'load_named_pattern', 'bundled_tables',
    # Pattern
    'variable_labels', 'build_design_matrix', 'pattern_components', 'analyze_pattern',
    # Real
    'solve_magnitudes', 'build_sign_system', 'solve_real', 'brute_force_signs',
    # Complex
    'build_phase_system', 'solve_phase_system', 'count_complex', 'non_uniqueness_witness',
    'brute_force_sigma',
    # Verification
    'solution_violations', 'verify_solution', 'verify_exact_magnitudes',
    # Noisy fit
    'fit_least_squares', 'objective_value', 'uniform_noise', 'generate_noisy', 'rank_one_tensor',
    'reconstruct_full', 'fit_quality', 'replicate_noise_experiment',
]
