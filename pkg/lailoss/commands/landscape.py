"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    lailoss landscape --loss lai-mae --lam 0.5,1,2 --out grid.csv

    Evaluates the loss surface of y = m*x + b over a (slope, intercept) grid
    on a generated band dataset (or --data), writes one CSV per lambda and
    prints the minimum as JSON on stdout. With several lambdas the files are
    named <stem>_lam<lambda>.csv.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# commands/landscape.py - loss surfaces
import json
from pathlib import Path
from typing import Optional

import typer

from .. import settings
from ..datasets import gen_linear_band, load_csv
from ..errors import ConfigError
from ..landscape import Axis, LossKind, export_grid, grid_argmin, landscape_sweep
from ..reports import OutputSet
from . import exit_on_error, parse_float_list


def _grid_name(out: Path, lam: Optional[float], many: bool) -> str:
    if not many or lam is None:
        return out.name
    return f"{out.stem}_lam{lam:g}{out.suffix or '.csv'}"


def landscape(
    out: Path = typer.Option(..., "--out", help="CSV path for the grid"),
    loss: LossKind = typer.Option(LossKind.LAI_MAE, "--loss", help="loss kind"),
    lam: str = typer.Option("1", "--lam", help="lambda, or a comma-separated list"),
    data: Optional[Path] = typer.Option(None, "--data", help="one-feature CSV instead of generated data"),
    n: int = typer.Option(2000, "--n", help="generated sample count"),
    true_slope: float = typer.Option(3.0, "--true-slope"),
    true_intercept: float = typer.Option(4.0, "--true-intercept"),
    x_half_range: float = typer.Option(1.0, "--x-half-range"),
    band_half_width: float = typer.Option(5.0, "--band-half-width"),
    seed: int = typer.Option(settings.DEFAULT_SEED, "--seed"),
    slope_min: float = typer.Option(-1.0, "--slope-min"),
    slope_max: float = typer.Option(12.0, "--slope-max"),
    slope_steps: int = typer.Option(400, "--slope-steps"),
    intercept_min: float = typer.Option(0.0, "--intercept-min"),
    intercept_max: float = typer.Option(8.0, "--intercept-max"),
    intercept_steps: int = typer.Option(400, "--intercept-steps"),
):
    """Brute-force (slope, intercept) loss grid and its minimum."""
    with exit_on_error():
        lambdas = parse_float_list(lam, "--lam")
        slope_axis = Axis(slope_min, slope_max, slope_steps)
        intercept_axis = Axis(intercept_min, intercept_max, intercept_steps)
        if data is not None:
            if not data.is_file():
                raise ConfigError(f"data file not found: {data}")
            dataset = load_csv(data)
        else:
            dataset = gen_linear_band(n, true_slope, true_intercept, x_half_range, band_half_width, seed)

        grids = landscape_sweep(dataset, loss, lambdas, slope_axis, intercept_axis)
        many = len(grids) > 1
        minima = []
        with OutputSet(out.parent) as files:
            for grid in grids:
                export_grid(grid, files.path(_grid_name(out, grid.lam, many)))
                slope, intercept, value = grid_argmin(grid)
                minima.append({"kind": loss.value, "lam": grid.lam, "slope": slope,
                               "intercept": intercept, "loss": value})
        typer.echo(json.dumps(minima if many else minima[0]))
