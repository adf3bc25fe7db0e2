"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Report files written by the commands and read back by ``compare``.

        epochs.csv    epoch, train_loss, val_rmse, seconds   (one row per epoch)
        trail.json    full TrainReport incl. the Lai batch choice of each epoch
        summary.json  ExperimentSummary (+ control comparison when paired)

    Floats are written with 17 significant digits so files round-trip exactly.
    JSON is strict: an undefined percent change or gap is written as null.
    OutputSet removes every file it wrote when the enclosing block fails.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# reports.py - CSV / JSON report I/O and comparisons
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from .errors import IoError, ParseError
from .metrics import percent_change
from .schemas import TrainReport

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
REPORT_COLUMNS = ["epoch", "train_loss", "val_rmse", "seconds"]


def report_frame(report: TrainReport) -> pd.DataFrame:
    rows = [[r.epoch, r.train_loss, r.val_rmse, r.seconds] for r in report.records]
    frame = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    return frame.astype({"epoch": np.int64, "train_loss": np.float64, "val_rmse": np.float64,
                         "seconds": np.float64})


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    path = Path(path)
    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}", path=str(path)) from exc
    return path


def write_json(data: dict, path: Path) -> Path:
    path = Path(path)
    try:
        path.write_text(json.dumps(data, indent=2, sort_keys=True, allow_nan=False) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}", path=str(path)) from exc
    return path


def read_report_csv(path: Path) -> pd.DataFrame:
    path = Path(path)
    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except FileNotFoundError as exc:
        raise IoError(f"report not found: {path}", path=str(path)) from exc
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    missing = [c for c in REPORT_COLUMNS if c not in frame.columns]
    if missing:
        raise ParseError(f"{path}: missing columns {missing}")
    if frame.empty:
        raise ParseError(f"{path}: report has no epochs")
    return frame


def compare_reports(a: pd.DataFrame, b: pd.DataFrame) -> Dict[str, Optional[float]]:
    """Final / best validation RMSE of ``a`` vs ``b`` and their largest gap on shared epochs."""
    shared = pd.merge(a[["epoch", "val_rmse"]], b[["epoch", "val_rmse"]], on="epoch", suffixes=("_a", "_b"))
    gap = float((shared["val_rmse_a"] - shared["val_rmse_b"]).abs().max()) if not shared.empty else None
    final_a, final_b = float(a["val_rmse"].iloc[-1]), float(b["val_rmse"].iloc[-1])
    best_a, best_b = float(a["val_rmse"].min()), float(b["val_rmse"].min())
    return {
        "final_val_rmse_a": final_a,
        "final_val_rmse_b": final_b,
        "final_change_pct": percent_change(final_a, final_b),
        "best_val_rmse_a": best_a,
        "best_val_rmse_b": best_b,
        "best_change_pct": percent_change(best_a, best_b),
        "max_gap": gap,
        "shared_epochs": int(shared.shape[0]),
    }


class OutputSet:
    """Tracks files written inside a ``with`` block; on failure they are removed."""

    def __init__(self, out_dir: Path):
        self.out_dir = Path(out_dir)
        self.written: List[Path] = []

    def __enter__(self) -> "OutputSet":
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise IoError(f"cannot create output directory {self.out_dir}: {exc}", path=str(self.out_dir)) from exc
        return self

    def path(self, name: str) -> Path:
        p = self.out_dir / name
        self.written.append(p)
        return p

    def __exit__(self, exc_type, exc, tb) -> bool:
        if exc_type is not None:
            for p in self.written:
                if p.exists():
                    logger.debug("removing partial output %s", p)
                    p.unlink()
        return False
