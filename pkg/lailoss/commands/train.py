"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    lailoss train --config configs/lai_l2_mse.json --data train.csv --out runs/lai

    Runs the full protocol and writes into --out:
        epochs.csv, trail.json, summary.json, model.json
    and with --with-control also control_epochs.csv / control_trail.json.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# commands/train.py - experiment runs
from pathlib import Path
from typing import Optional

import typer
from rich.table import Table

from .. import settings
from ..checkpoints import save_checkpoint
from ..datasets import load_csv
from ..errors import ConfigError
from ..metrics import percent_change
from ..reports import OutputSet, report_frame, write_csv, write_json
from ..schemas import load_train_config
from ..trainer import ExperimentResult, run_experiment, run_paired
from . import console, exit_on_error

CHECKPOINT_NAME = "model.json"


def _summary_table(result: ExperimentResult, control: Optional[ExperimentResult]) -> Table:
    table = Table(title="run summary")
    table.add_column("run")
    table.add_column("final val RMSE", justify="right")
    table.add_column("output variance", justify="right")
    rows = [("lai" if not result.summary.baseline_mode else "baseline", result)]
    if control is not None:
        rows.append(("control", control))
    for name, r in rows:
        table.add_row(name, f"{r.summary.final_val_rmse:.6g}", f"{r.summary.output_variance:.6g}")
    return table


def train(
    config: Path = typer.Option(..., "--config", help="TrainConfig JSON document"),
    data: Path = typer.Option(..., "--data", help="CSV with a header row; last column is the target"),
    out: Path = typer.Option(Path(settings.OUTPUT_DIR), "--out", help="output directory"),
    test: Optional[Path] = typer.Option(None, "--test", help="optional CSV (same layout) for output variance"),
    drop_id: bool = typer.Option(False, "--drop-id", help="drop an 'id' column before parsing"),
    seed: Optional[int] = typer.Option(None, "--seed", help="root seed; overrides the config"),
    with_control: bool = typer.Option(False, "--with-control", help="also run the baseline twin"),
):
    """Pretrain, then Lai Training (or baseline continuation)."""
    with exit_on_error():
        cfg = load_train_config(config)
        if seed is not None:
            cfg = cfg.model_copy(update={"seed": seed})
        for path in (data, test):
            if path is not None and not path.is_file():
                raise ConfigError(f"data file not found: {path}")

        dataset = load_csv(data, drop_id=drop_id)
        test_set = load_csv(test, drop_id=drop_id) if test is not None else None
        if with_control:
            result, control = run_paired(cfg, dataset, test_set)
        else:
            result, control = run_experiment(cfg, dataset, test_set), None

        summary = result.summary.model_dump(mode="json")
        if control is not None:
            summary["control"] = control.summary.model_dump(mode="json")
            summary["change_pct"] = {
                "final_val_rmse": percent_change(result.summary.final_val_rmse, control.summary.final_val_rmse),
                "output_variance": percent_change(result.summary.output_variance, control.summary.output_variance),
            }

        with OutputSet(out) as files:
            save_checkpoint(files.path(CHECKPOINT_NAME), result.model, result.standardization)
            report = result.report.model_copy(update={"checkpoint": CHECKPOINT_NAME})
            write_csv(report_frame(report), files.path("epochs.csv"))
            write_json(report.model_dump(mode="json"), files.path("trail.json"))
            if control is not None:
                write_csv(report_frame(control.report), files.path("control_epochs.csv"))
                write_json(control.report.model_dump(mode="json"), files.path("control_trail.json"))
            write_json(summary, files.path("summary.json"))

        console.print(_summary_table(result, control))
        console.print(f"reports written to {out}", soft_wrap=True)
