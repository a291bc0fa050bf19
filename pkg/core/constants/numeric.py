"""
Numeric tolerances and exact-arithmetic parameters
"""

# Modular rank certificate (rank mod p is a lower bound for the rank over Q)
MODULAR_RANK_PRIME = 2_147_483_647  # 2**31 - 1, products of residues fit in int64

# Float-mode magnitude consistency: max |A x - q| <= rtol * (1 + max |q|)
FLOAT_CONSISTENCY_RTOL = 1e-8

# Least-squares optimality: ||grad|| <= rtol * (1 + ||q||)
GRADIENT_RTOL = 1e-10

# Solution checks
SOLUTION_MAGNITUDE_RTOL = 1e-9

# Float phases are snapped to rationals
PHASE_SNAP_TOLERANCE = 1e-12
MAX_PHASE_DENOMINATOR = 10**6

# Uniform draws map the high 53 bits of a 64-bit word to [0, 1)
UNIFORM_MANTISSA_BITS = 53
