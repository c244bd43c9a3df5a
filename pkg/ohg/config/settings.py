"""
Configuration settings for the ohg toolkit.
Load from environment variables so limits can be tuned per machine.
"""
import os
from dotenv import load_dotenv

load_dotenv()

# Enumeration limits
MAX_CIRCLE_LENGTH = int(os.getenv("OHG_MAX_CIRCLE_LENGTH", "16"))
MAX_CIRCLES = int(os.getenv("OHG_MAX_CIRCLES", "10000"))
FLOWER_EDGE_CAP = int(os.getenv("OHG_FLOWER_EDGE_CAP", "14"))
BRUTE_FORCE_INCIDENCE_CAP = int(os.getenv("OHG_BRUTE_FORCE_INCIDENCE_CAP", "20"))

# Hypergraph construction
STRICT_MODE = os.getenv("OHG_STRICT", "true").lower() == "true"

# Logging Configuration
LOG_FILE = os.getenv("OHG_LOG_FILE", "")
DEBUG = os.getenv("OHG_DEBUG", "false").lower() == "true"

# Verification runs
VERIFY_SEED = int(os.getenv("OHG_VERIFY_SEED", "1"))
VERIFY_COUNT = int(os.getenv("OHG_VERIFY_COUNT", "1000"))
VERIFY_RANDOM_COUNT = int(os.getenv("OHG_VERIFY_RANDOM_COUNT", "10000"))
VERIFY_MAX_SIZE = int(os.getenv("OHG_VERIFY_MAX_SIZE", "9"))
VERIFY_WORKERS = int(os.getenv("OHG_VERIFY_WORKERS", "1"))
