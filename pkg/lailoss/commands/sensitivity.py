"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    lailoss sensitivity --checkpoint runs/lai/model.json --data val.csv \
        --sigma 1.0 --baseline runs/base/sensitivity.csv --out runs/lai/sensitivity.csv

    Features are transformed with the checkpoint's standardization when it
    carries one.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# commands/sensitivity.py - per-feature noise sensitivity
from pathlib import Path
from typing import Optional

import pandas as pd
import typer
from rich.table import Table

from .. import settings
from ..checkpoints import load_checkpoint
from ..datasets import load_csv
from ..errors import ConfigError, DimensionError
from ..metrics import read_sensitivity_csv, sensitivity_frame, sensitivity_report
from ..reports import OutputSet, write_csv
from . import console, exit_on_error


def sensitivity(
    checkpoint: Path = typer.Option(..., "--checkpoint", help="model.json written by train"),
    data: Path = typer.Option(..., "--data", help="CSV in the training layout"),
    out: Path = typer.Option(..., "--out", help="CSV path for the report"),
    sigma: float = typer.Option(1.0, "--sigma", help="noise standard deviation (> 0)"),
    seed: int = typer.Option(settings.DEFAULT_SEED, "--seed"),
    repeats: int = typer.Option(1, "--repeats", help="noise draws per feature"),
    baseline: Optional[Path] = typer.Option(None, "--baseline", help="earlier sensitivity CSV"),
    drop_id: bool = typer.Option(False, "--drop-id"),
):
    """Mean absolute output change under Gaussian noise on each feature."""
    with exit_on_error():
        if not sigma > 0.0:
            raise ConfigError(f"--sigma must be > 0, got {sigma}")
        if not data.is_file():
            raise ConfigError(f"data file not found: {data}")
        baseline_values = read_sensitivity_csv(baseline) if baseline is not None else None
        model, stats = load_checkpoint(checkpoint)
        dataset = load_csv(data, drop_id=drop_id)
        if dataset.n_features != model.n_inputs:
            raise DimensionError(f"model expects {model.n_inputs} features, {data} has {dataset.n_features}")
        X = stats.apply(dataset.X) if stats is not None else dataset.X

        report = sensitivity_report(model, X, dataset.feature_names, sigma, seed, repeats, y=dataset.y)
        frame = sensitivity_frame(report, baseline_values)
        with OutputSet(out.parent) as files:
            write_csv(frame, files.path(out.name))

        table = Table(title=f"sensitivity (sigma={sigma:g}, seed={seed}, repeats={repeats}, n={report.n_samples})")
        shown = ["feature_name", "sensitivity", "change_pct"]
        for column in shown:
            table.add_column(column, justify="right" if column != "feature_name" else "left")
        for name, value, change in frame[shown].itertuples(index=False):
            table.add_row(str(name), f"{value:.6g}", "" if pd.isna(change) else f"{change:+.2f}%")
        console.print(table)
