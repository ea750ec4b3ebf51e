"""Configuration settings for the toolkit."""
import os
from dotenv import load_dotenv

from attainlab import __version__

# Load environment variables from .env file
load_dotenv()

# Runtime settings
TOOL_THREADS = max(1, int(os.getenv("TOOL_THREADS", 1)))
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()

# Numerical tolerances
RANK_REL_TOL = float(os.getenv("RANK_REL_TOL", 1e-9))
GRAMIAN_RANK_TOL = float(os.getenv("GRAMIAN_RANK_TOL", 1e-8))
ROOT_TOL = float(os.getenv("ROOT_TOL", 1e-12))
NU_MARGIN = float(os.getenv("NU_MARGIN", 0.05))
BIORTH_THRESHOLD = float(os.getenv("BIORTH_THRESHOLD", 1e-10))
INDEPENDENCE_TOL = float(os.getenv("INDEPENDENCE_TOL", 1e-6))

# Report metadata
SCHEMA_VERSION = 1
TOOL_VERSION = __version__
