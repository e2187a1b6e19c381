"""
mini-mode: half-sample mode and robust location estimators.

Provides:
- Version numbering
- Global config directory resolution
"""

__version__ = "0.1.0"

import os
from pathlib import Path

from platformdirs import user_config_dir

global_config_dir = Path(
    os.getenv("MINIMODE_GLOBAL_CONFIG_DIR") or user_config_dir("mini-mode")
)

__all__ = [
    "global_config_dir",
    "__version__",
]
