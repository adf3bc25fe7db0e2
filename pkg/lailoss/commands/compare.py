"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    lailoss compare runs/lai/epochs.csv runs/base/epochs.csv [--json]

    Compares the validation RMSE curve of report A with report B: final and
    best values, their percent change (A vs B) and the largest gap over the
    epochs both reports contain.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# commands/compare.py - report comparisons
import json
from pathlib import Path

import typer
from rich.table import Table

from ..reports import compare_reports, read_report_csv
from . import console, exit_on_error


def compare(
    report_a: Path = typer.Argument(..., help="report CSV (e.g. the Lai run)"),
    report_b: Path = typer.Argument(..., help="reference report CSV (e.g. the baseline)"),
    as_json: bool = typer.Option(False, "--json", help="print JSON instead of a table"),
):
    """Trend and percent-change summary of two training reports."""
    with exit_on_error():
        result = compare_reports(read_report_csv(report_a), read_report_csv(report_b))
        if as_json:
            typer.echo(json.dumps(result, sort_keys=True))
            return
        table = Table(title=f"{report_a.name} vs {report_b.name}")
        table.add_column("metric")
        table.add_column("A", justify="right")
        table.add_column("B", justify="right")
        table.add_column("change", justify="right")
        for key in ("final", "best"):
            change = result[f"{key}_change_pct"]
            table.add_row(f"{key} val RMSE", f"{result[f'{key}_val_rmse_a']:.6g}",
                          f"{result[f'{key}_val_rmse_b']:.6g}", "n/a" if change is None else f"{change:+.2f}%")
        gap = result["max_gap"]
        table.add_row("max curve gap", "n/a" if gap is None else f"{gap:.6g}", "", f"{result['shared_epochs']} epochs")
        console.print(table)
