"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    lailoss factor-curve --loss mse --lam 36 --k-min 0 --k-max 12 --out curve.csv

    Samples the geometric factor over a range of slopes k; prints the sampled
    minimum as JSON.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# commands/factor_curve.py - factor(k) samples
import json
from pathlib import Path

import numpy as np
import pandas as pd
import typer

from ..errors import ConfigError
from ..lai_loss import factor
from ..reports import OutputSet, write_csv
from ..schemas import BaseLoss
from . import exit_on_error


def factor_curve_frame(base: BaseLoss, lam: float, k_min: float, k_max: float, steps: int) -> pd.DataFrame:
    if steps < 2 or not k_max > k_min:
        raise ConfigError(f"need k_max > k_min and at least 2 steps, got [{k_min}, {k_max}] x {steps}")
    ks = np.linspace(k_min, k_max, steps)
    return pd.DataFrame({"k": ks, "factor": [float(factor(float(k), lam, base)) for k in ks]})


def factor_curve(
    out: Path = typer.Option(..., "--out", help="CSV path"),
    loss: BaseLoss = typer.Option(BaseLoss.MAE, "--loss", help="base loss"),
    lam: float = typer.Option(1.0, "--lam", help="lambda > 0"),
    k_min: float = typer.Option(0.0, "--k-min"),
    k_max: float = typer.Option(3.0, "--k-max"),
    steps: int = typer.Option(1001, "--steps"),
):
    """Tabulate factor_mae / factor_mse over k."""
    with exit_on_error():
        frame = factor_curve_frame(loss, lam, k_min, k_max, steps)
        with OutputSet(out.parent) as files:
            write_csv(frame, files.path(out.name))
        i = int(np.argmin(frame["factor"].to_numpy()))
        typer.echo(json.dumps({"k": float(frame["k"].iat[i]), "factor": float(frame["factor"].iat[i])}))
