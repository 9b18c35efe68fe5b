"""
Core constants used throughout molkit.
"""

# File system paths
LOG_DIR = "logs"
CONFIG_DEFAULTS_DIR = "config/defaults"
CORPUS_DIR = "corpus"

# File suffixes
LATTICE_SUFFIX = ".lat"
GEOMETRY_SUFFIX = ".geo"

# Environment overrides (MOLKIT_CAP -> config['molkit']['cap'])
ENV_PREFIX = "MOLKIT_"

# Limits
DEFAULT_CLOSURE_CAP = 100_000
DEFAULT_CHAIN_CAP = 100_000
DEFAULT_SUBSPACE_LATTICE_BOUND = 4096
DEFAULT_FAMILY_DEPTH = 8
MAX_LATTICE_SIZE = 2000
MAX_TERM_DEPTH = 200

# Sampling
DEFAULT_SAMPLE_COUNT = 500
SAMPLE_ENTRY_RANGE = 5
DEFAULT_SEED = 0

# Report statuses
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_INCONCLUSIVE = "inconclusive"
