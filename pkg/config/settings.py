"""
Settings for the rootgroups toolkit.

Every value can be overridden from the environment (or a `.env` file in the project root).
See `.env.example` for the full list.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

PRESETS_DIR = BASE_DIR / "presets"
FIXTURES_DIR = BASE_DIR / "fixtures"

TOOL_NAME = "rootgroups"
TOOL_VERSION = "1.0.0"

DEBUG = bool(os.getenv("ROOTGROUPS_DEBUG", ""))

# =========================================
# ENUMERATION SECTION
# =========================================
# sup-norm bound used when neither `--box` nor a `box:` key is given
DEFAULT_BOX_BOUND = int(os.getenv("ROOTGROUPS_BOX_BOUND", default="5"))

# the saturation check of a weight monoid never looks past this bound
SATURATION_CHECK_LIMIT = int(os.getenv("ROOTGROUPS_SATURATION_LIMIT", default="12"))

# =========================================
# REPORTS SECTION
# =========================================
JSON_INDENT = int(os.getenv("ROOTGROUPS_JSON_INDENT", default="2"))

BATCH_WORKERS = int(os.getenv("ROOTGROUPS_BATCH_WORKERS", default="4"))

# =========================================
# LOGGING SECTION
# =========================================
LOG_LEVEL = os.getenv("ROOTGROUPS_LOG_LEVEL", default="DEBUG" if DEBUG else "WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "console": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "console",
            "stream": "ext://sys.stderr",
        },
    },
    "root": {"handlers": ["console"], "level": LOG_LEVEL},
}
