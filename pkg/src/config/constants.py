"""Application constants."""

# Prime field bounds
DEFAULT_PRIME = 32003  # conventional benchmark prime
MODULUS_BOUND = 2**31  # exclusive upper bound on p

# Monomial storage
MAX_EXPONENT = 2**16 - 1  # exponents are 16-bit unsigned
MAX_DEGREE = 2**31 - 1

# Per-ring and per-run sort key caches (entries)
KEY_CACHE_SIZE = 2**16

# Homogenization
HOMOGENIZING_VARIABLE = "h"

# Text formats
INPUT_FORMAT_VERSION = "1"
CSV_SCHEMA_VERSION = "1"
CSV_HEADER_COMMENT = f"# groebner-sig bench csv v{CSV_SCHEMA_VERSION}"

CSV_COLUMNS = (
    "benchmark",
    "n",
    "homogenized",
    "algorithm",
    "sig_order",
    "criteria",
    "reduction_steps",
    "higher_sig_detections",
    "ratio_pct",
    "spoly_reductions",
    "zero_reductions",
    "discarded_nonminimal_pair",
    "discarded_syzygy_criterion",
    "discarded_rewritable",
    "sig_redundant_skips",
    "basis_size_final",
    "verified",
    "elapsed_ms",
)

# Written after CSV_COLUMNS only in extended mode
CSV_EXTENDED_COLUMNS = (
    "rewrite_flavor",
    "pairs_created",
    "signature_order_violations",
    "relation_violations",
    "strict_relation_events",
    "homogeneous_equality_violations",
    "sugar_sigdeg_violations",
    "completion_additions",
    "max_basis_size",
    "status",
)

TIMEOUT_STATUS = "TIMEOUT"

# Benchmark grids: family -> sizes
DESK_GRID = {
    "cyclic": (4, 5, 6),
    "katsura": (4, 5, 6, 7, 8),
    "eco": (5, 6, 7, 8),
}

FULL_GRID = {
    "cyclic": (7, 8),
    "katsura": (10, 11, 12),
    "eco": (9, 10, 11),
}

# Smallest admissible size per generator family
MIN_FAMILY_SIZE = {
    "cyclic": 2,
    "katsura": 1,
    "eco": 3,
}
