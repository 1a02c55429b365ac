"""
Runtime settings for spinqpt.
Values come from the environment (optionally a .env file) with the defaults below.
"""

import os
import logging
from dataclasses import dataclass

from dotenv import load_dotenv

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Load environment variables from .env file if it exists
load_dotenv()


@dataclass(frozen=True)
class Settings:
    """Environment-driven settings shared by the CLI and the sweep runner."""
    log_level: str = "INFO"
    workers: int = 1
    oracle_cap: int = 4096
    n_cap: int = 6400
    output_dir: str = "results"


def get_settings() -> Settings:
    """
    Read settings from the environment.

    Returns:
        Settings populated from SPINQPT_* variables
    """
    return Settings(
        log_level=os.environ.get("SPINQPT_LOG_LEVEL", "INFO").upper(),
        workers=max(1, int(os.environ.get("SPINQPT_WORKERS", 1))),
        oracle_cap=int(os.environ.get("SPINQPT_ORACLE_CAP", 4096)),
        n_cap=int(os.environ.get("SPINQPT_N_CAP", 6400)),
        output_dir=os.environ.get("SPINQPT_OUTPUT_DIR", "results"),
    )


def configure_logging(level: str = "INFO") -> None:
    """Set up root logging in the project's format."""
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO), format=LOG_FORMAT)
