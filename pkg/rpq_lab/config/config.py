"""Configuration for the RPQ lab"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


# Evaluation limits
RESULT_CAP = _int_from_env("RPQLAB_CAP", 1_000_000)

# Randomness
DEFAULT_SEED = _int_from_env("RPQLAB_SEED", 2024)

# Lab trials
DEFAULT_TRIALS = _int_from_env("RPQLAB_TRIALS", 300)
HOLDS_TRIALS = _int_from_env("RPQLAB_HOLDS_TRIALS", 1000)

# Generator defaults
MAX_VERTICES = 4
MAX_EDGES = 6
ALPHABET_SIZE = 2
REGEX_DEPTH = 3

# Instances used by the slower checks are shrunk to these sizes
SMALL_MAX_VERTICES = 3
SMALL_MAX_EDGES = 4
SMALL_REGEX_DEPTH = 2

# Property checks
LAB_WALK_LEN = _int_from_env("RPQLAB_LAB_WALK_LEN", 6)
UNBOUNDED_MAX = _int_from_env("RPQLAB_UNBOUNDED_MAX", 8)

# Lab trials stop at these sizes and count as skipped
LAB_RESULT_CAP = _int_from_env("RPQLAB_LAB_CAP", 20_000)
LAB_ORACLE_CAP = _int_from_env("RPQLAB_LAB_ORACLE_CAP", 20_000)
LAB_PAIR_CAP = _int_from_env("RPQLAB_LAB_PAIR_CAP", 2_000)  # pairwise order checks

# A check draws up to this many samples per requested random trial, replacing skipped ones
SAMPLE_ATTEMPTS = _int_from_env("RPQLAB_SAMPLE_ATTEMPTS", 3)

# Costs used by the cheapest-walk semantics inside the lab
LAB_COSTS = {"a": 2, "b": 1}
LAB_DEFAULT_COST = 1

# Benchmark families
BENCH_PATH_SIZES = [10, 100, 1000]
BENCH_FLASHLIGHT_SIZES = [10, 50, 100]
BENCH_RANDOM_VERTICES = 1000
BENCH_RANDOM_EDGES = 5000
BENCH_QUERY = "(a + b)* c (a + b + c) (a b)* c"  # 9 atoms, 10 automaton states
BENCH_LABELS = ["a", "b", "c"]

# Logging
LOG_LEVEL = os.getenv("RPQLAB_LOG_LEVEL", "WARNING").upper()

# Validate settings
if RESULT_CAP <= 0:
    raise ValueError("RPQLAB_CAP must be a positive integer")
if DEFAULT_TRIALS <= 0 or HOLDS_TRIALS <= 0:
    raise ValueError("RPQLAB_TRIALS and RPQLAB_HOLDS_TRIALS must be positive")
if LAB_WALK_LEN <= 0 or UNBOUNDED_MAX <= 0:
    raise ValueError("RPQLAB_LAB_WALK_LEN and RPQLAB_UNBOUNDED_MAX must be positive")
if LAB_RESULT_CAP <= 0 or LAB_ORACLE_CAP <= 0 or LAB_PAIR_CAP <= 0:
    raise ValueError("RPQLAB_LAB_CAP, RPQLAB_LAB_ORACLE_CAP and RPQLAB_LAB_PAIR_CAP must be positive")
if SAMPLE_ATTEMPTS <= 0:
    raise ValueError("RPQLAB_SAMPLE_ATTEMPTS must be positive")
if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    raise ValueError(f"RPQLAB_LOG_LEVEL not recognised: {LOG_LEVEL}")
