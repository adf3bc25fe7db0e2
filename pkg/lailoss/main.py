"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    CLI entry point. Run with ``python -m lailoss <command>``.

        train          pretrain + Lai Training, reports and checkpoint
        landscape      (slope, intercept) loss grids and their minima
        factor-curve   factor(k) samples
        sensitivity    per-feature noise sensitivity of a checkpoint
        compare        two training reports side by side

    Exit codes: 0 success, 1 runtime error, 2 usage or config error.

Change Log:
    Version 1.0 (10/16/2026): Created main to assemble the commands
"""
# main.py
import typer

from . import settings
from .commands import compare, factor_curve, landscape, sensitivity, train

app = typer.Typer(
    name="lailoss",
    help="Lai loss training, landscapes and sensitivity studies",
    add_completion=False,
    no_args_is_help=True,
)


@app.callback()
def main(
    log_level: str = typer.Option(settings.LOG_LEVEL, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
):
    settings.configure_logging(log_level)


app.command("train")(train.train)
app.command("landscape")(landscape.landscape)
app.command("factor-curve")(factor_curve.factor_curve)
app.command("sensitivity")(sensitivity.sensitivity)
app.command("compare")(compare.compare)
