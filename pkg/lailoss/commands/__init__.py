"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    One module per CLI command; lailoss/main.py assembles them.
    Shared console objects and the error guard live here.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# commands/__init__.py - shared CLI plumbing
import logging
from contextlib import contextmanager
from typing import Iterator, List

import typer
from rich.console import Console
from rich.markup import escape

from ..errors import ConfigError, LaiLossError

logger = logging.getLogger(__name__)

console = Console()
err_console = Console(stderr=True)


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Turn library errors into a message on stderr and the error's exit code."""
    try:
        yield
    except LaiLossError as exc:
        logger.debug("command failed", exc_info=True)
        err_console.print(f"[bold red]error:[/bold red] {escape(str(exc))}", soft_wrap=True)
        raise typer.Exit(code=exc.exit_code) from exc


def parse_float_list(raw: str, option: str) -> List[float]:
    try:
        values = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise ConfigError(f"{option} expects comma-separated numbers, got {raw!r}") from exc
    if not values:
        raise ConfigError(f"{option} is empty")
    return values
