"""
Default enumeration and oracle limits
"""

# Brute-force sigma oracle: 3**16 ~ 43M systems
DEFAULT_ORACLE_CAP = 16

# Sign oracle: 2**22 candidate sign vectors
DEFAULT_SIGN_ORACLE_MAX_UNKNOWNS = 22

# Real solutions are listed only when the GF(2) kernel is at most this big
DEFAULT_REAL_ENUMERATION_MAX_KERNEL = 20

# Complex solutions are listed only up to this count
DEFAULT_COMPLEX_MATERIALIZATION_CAP = 4096

# Left-kernel certificates are computed up to this many observations
DEFAULT_CERTIFICATE_MAX_ROWS = 256

# Oracle enumeration chunk (rows of the sigma grid per vectorised block)
ORACLE_CHUNK_SIZE = 1 << 15

# Lift indices of the sigma oracle are int64
MAX_ORACLE_LIFTS = 2 ** 62
