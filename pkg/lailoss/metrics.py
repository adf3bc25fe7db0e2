"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Evaluation metrics: RMSE, output variance (smoothness proxy) and
    per-feature Gaussian-noise sensitivity, plus the sensitivity CSV.

    Sensitivity CSV columns: feature_name, sensitivity, change_pct, sigma,
    seed, repeats. A final row named ``rmse`` carries the model's RMSE on the
    evaluated data when known. change_pct is empty without a baseline or when
    the baseline value is 0.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# metrics.py - rmse, output variance, noise sensitivity
from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from .datasets import add_gaussian_noise
from .errors import ConfigError, DimensionError, EmptyBatch, IoError, ParseError
from .mlp import MlpModel, predict_batch
from .schemas import SensitivityReport

logger = logging.getLogger(__name__)

RMSE_ROW = "rmse"
SENSITIVITY_COLUMNS = ["feature_name", "sensitivity", "change_pct", "sigma", "seed", "repeats"]


def rmse(pred: Sequence[float], target: Sequence[float]) -> float:
    pred = np.asarray(pred, dtype=np.float64).ravel()
    target = np.asarray(target, dtype=np.float64).ravel()
    if pred.shape != target.shape:
        raise DimensionError(f"prediction length {pred.shape[0]} != target length {target.shape[0]}")
    if pred.shape[0] == 0:
        raise EmptyBatch("rmse of zero samples")
    r = pred - target
    return float(np.sqrt(np.mean(r * r)))


def output_variance(model: MlpModel, X: np.ndarray) -> float:
    """Population variance of the model's predictions over the rows of X."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] == 0:
        raise EmptyBatch("output variance needs at least one row")
    return float(np.var(predict_batch(model, X)))


def sensitivity(model: MlpModel, X: np.ndarray, feature_index: int, sigma: float, seed: int,
                repeats: int = 1) -> float:
    """Mean |f(x + eps e_j) - f(x)| with eps ~ N(0, sigma^2), one draw per row per repeat."""
    if not sigma > 0.0:
        raise ConfigError(f"sigma must be > 0, got {sigma}")
    if repeats < 1:
        raise ConfigError(f"repeats must be >= 1, got {repeats}")
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] == 0:
        raise EmptyBatch("sensitivity needs at least one row")
    clean = predict_batch(model, X)
    total = 0.0
    for draw in range(repeats):
        noisy = predict_batch(model, add_gaussian_noise(X, feature_index, sigma, seed, draw))
        total += float(np.mean(np.abs(noisy - clean)))
    return total / repeats


def sensitivity_report(model: MlpModel, X: np.ndarray, feature_names: Sequence[str], sigma: float,
                       seed: int, repeats: int = 1, y: Optional[np.ndarray] = None) -> SensitivityReport:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.n_inputs:
        raise DimensionError(f"model expects {model.n_inputs} features, data has shape {X.shape}")
    if len(feature_names) != X.shape[1]:
        raise DimensionError(f"{len(feature_names)} names for {X.shape[1]} features")
    values = [sensitivity(model, X, j, sigma, seed, repeats) for j in range(X.shape[1])]
    logger.debug("sensitivities %s", values)
    return SensitivityReport(
        feature_names=list(feature_names),
        values=values,
        sigma=sigma,
        seed=seed,
        n_samples=X.shape[0],
        repeats=repeats,
        rmse=rmse(predict_batch(model, X), y) if y is not None else None,
    )


def percent_change(value: float, baseline: float) -> Optional[float]:
    """100 * (value - baseline) / baseline; 0 when both are 0, None when only the baseline is."""
    if baseline == 0.0:
        return 0.0 if value == 0.0 else None
    return 100.0 * (value - baseline) / baseline


def sensitivity_frame(report: SensitivityReport, baseline: Optional[Dict[str, float]] = None) -> pd.DataFrame:
    names = list(report.feature_names)
    values = list(report.values)
    if report.rmse is not None:
        names.append(RMSE_ROW)
        values.append(report.rmse)
    changes: List[Optional[float]] = []
    for name, value in zip(names, values):
        if baseline is None or (name == RMSE_ROW and name not in baseline):
            changes.append(None)
        elif name not in baseline:
            raise DimensionError(f"baseline report has no row {name!r}")
        else:
            changes.append(percent_change(value, baseline[name]))
    frame = pd.DataFrame({"feature_name": names, "sensitivity": values,
                          "change_pct": pd.Series(changes, dtype=np.float64)})
    return frame.assign(sigma=report.sigma, seed=report.seed, repeats=report.repeats)[SENSITIVITY_COLUMNS]


def read_sensitivity_csv(path: Path) -> Dict[str, float]:
    """feature_name -> sensitivity (including the rmse row when present)."""
    path = Path(path)
    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except FileNotFoundError as exc:
        raise IoError(f"baseline report not found: {path}", path=str(path)) from exc
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    missing = {"feature_name", "sensitivity"} - set(frame.columns)
    if missing:
        raise ParseError(f"{path}: missing columns {sorted(missing)}")
    return {str(n): float(v) for n, v in zip(frame["feature_name"], frame["sensitivity"])}
