"""Centralized configuration for the hopfext package.

Provides paths, budgets, and environment configuration
used across all modules.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Package root (hopfext/ directory)
PACKAGE_ROOT = Path(__file__).parent

# Working directory (where the user runs the CLI from)
WORKING_DIR = Path.cwd()

# Load environment variables from current working directory
load_dotenv(WORKING_DIR / ".env")

# Directory paths
TEMPLATES_DIR = PACKAGE_ROOT / "templates"
OUTPUTS_DIR = Path(os.getenv("HOPFEXT_OUTPUT_DIR", str(WORKING_DIR / "outputs")))

# Enumeration budgets - brute-force paths fail fast above these
MAX_GROUP_ORDER = int(os.getenv("HOPFEXT_MAX_GROUP_ORDER", "625"))
MAX_AUTOMORPHISMS = int(os.getenv("HOPFEXT_MAX_AUTOMORPHISMS", "200000"))
MAX_ORACLE_ORDER = int(os.getenv("HOPFEXT_MAX_ORACLE_ORDER", "27"))
MAX_CARRIER_ORDER = int(os.getenv("HOPFEXT_MAX_CARRIER_ORDER", "250000"))

# Seed for generator extraction and perturbation tests
DEFAULT_SEED = int(os.getenv("HOPFEXT_SEED", "0"))

# Report formats accepted by the CLI (comma-separated override)
_default_formats = "json,tsv,text"
VALID_FORMATS = tuple(os.getenv("HOPFEXT_VALID_FORMATS", _default_formats).split(","))
