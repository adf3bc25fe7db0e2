"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Environment-driven defaults and logging setup.
    Values come from the process environment, optionally seeded from
    lailoss/.env (python-dotenv).

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# settings.py - env defaults + logging
import logging
import os
from pathlib import Path

# Load env from lailoss/.env
try:
    from dotenv import load_dotenv
    load_dotenv(dotenv_path=Path(__file__).parent / ".env")
except ImportError:
    pass

LOG_LEVEL = os.getenv("LAILOSS_LOG_LEVEL", "INFO")
OUTPUT_DIR = os.getenv("LAILOSS_OUTPUT_DIR", "runs")
DEFAULT_SEED = int(os.getenv("LAILOSS_SEED", "42"))


def configure_logging(level: str = LOG_LEVEL) -> None:
    from rich.console import Console
    from rich.logging import RichHandler

    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
