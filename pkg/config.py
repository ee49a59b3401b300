"""Project configuration, paths and search budgets."""

import os
from pathlib import Path

from dotenv import load_dotenv

PROJECT_ROOT = Path(__file__).parent

load_dotenv(PROJECT_ROOT / ".env")

# Corpus
CORPUS_DIR = PROJECT_ROOT / "corpus"
SMALL_GROUPS_DIR = CORPUS_DIR / "small_transitive"
FIXTURES_DIR = CORPUS_DIR / "fixtures"


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or not value.strip():
        return default
    return int(value)


# Budgets (each mirrors a CLI flag)
BUDGET_NODES = _env_int("BINARITY_BUDGET_NODES", 10**8)
DEGREE_CAP = _env_int("BINARITY_DEGREE_CAP", 10**6)
CLOSURE_CAP = _env_int("BINARITY_CLOSURE_CAP", 10**4)
ENUMERATION_CAP = _env_int("BINARITY_ENUMERATION_CAP", 10**7)
TUPLE_BUDGET = _env_int("BINARITY_TUPLE_BUDGET", 10**7)
MAX_ELL = _env_int("BINARITY_MAX_ELL", 6)
WORKERS = _env_int("BINARITY_WORKERS", 1)

# Exhaustive arity oracle regime
ORACLE_MAX_DEGREE = _env_int("BINARITY_ORACLE_MAX_DEGREE", 8)
ORACLE_MAX_ORDER = _env_int("BINARITY_ORACLE_MAX_ORDER", 5000)
