"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Brute-force loss surfaces of the line y = m*x + b over a (slope, intercept)
    grid for a one-feature dataset.

        grid = grid_eval(gen_linear_band(), Axis(-1, 12, 400), Axis(0, 8, 400), "lai-mae", 1.0)
        slope, intercept, loss = grid_argmin(grid)

    For the Lai kinds the input gradient of a line is its slope, so every cell
    is the plain mean loss times factor(m, lambda), a factor that does not
    depend on the intercept.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# landscape.py - (slope, intercept) grids, minima, CSV export
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .datasets import Dataset
from .errors import ConfigError, DimensionError, IoError, ParseError
from .lai_loss import factor
from .reports import write_csv
from .schemas import BaseLoss

logger = logging.getLogger(__name__)

# upper bound on the residual block held in memory per slope
_CHUNK_ELEMENTS = 4_000_000


class LossKind(str, Enum):
    MAE = "mae"
    MSE = "mse"
    LAI_MAE = "lai-mae"
    LAI_MSE = "lai-mse"

    @property
    def base(self) -> BaseLoss:
        return BaseLoss.MAE if self in (LossKind.MAE, LossKind.LAI_MAE) else BaseLoss.MSE

    @property
    def is_lai(self) -> bool:
        return self in (LossKind.LAI_MAE, LossKind.LAI_MSE)


@dataclass(frozen=True)
class Axis:
    min: float
    max: float
    steps: int

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ConfigError(f"axis needs at least one step, got {self.steps}")
        if not (np.isfinite(self.min) and np.isfinite(self.max)):
            raise ConfigError("axis bounds must be finite")
        if self.max < self.min or (self.steps > 1 and self.max == self.min):
            raise ConfigError(f"axis [{self.min}, {self.max}] with {self.steps} steps is empty")

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.steps)

    @property
    def step(self) -> float:
        return (self.max - self.min) / (self.steps - 1) if self.steps > 1 else 0.0


DEFAULT_SLOPE_AXIS = Axis(-1.0, 12.0, 400)
DEFAULT_INTERCEPT_AXIS = Axis(0.0, 8.0, 400)


@dataclass
class LandscapeGrid:
    slope_axis: Axis
    intercept_axis: Axis
    loss: np.ndarray  # (slope steps, intercept steps)
    kind: Optional[LossKind] = None
    lam: Optional[float] = None

    def __post_init__(self) -> None:
        self.loss = np.asarray(self.loss, dtype=np.float64)
        if self.loss.shape != (self.slope_axis.steps, self.intercept_axis.steps):
            raise DimensionError(f"loss matrix {self.loss.shape} does not match axes "
                                 f"({self.slope_axis.steps}, {self.intercept_axis.steps})")


def _plain_grid(x: np.ndarray, y: np.ndarray, slopes: np.ndarray, intercepts: np.ndarray,
                base: BaseLoss) -> np.ndarray:
    out = np.empty((slopes.shape[0], intercepts.shape[0]))
    chunk = max(1, _CHUNK_ELEMENTS // x.shape[0])
    for i, m in enumerate(slopes):
        r = y - m * x
        for start in range(0, intercepts.shape[0], chunk):
            b = intercepts[start:start + chunk]
            e = b[:, None] - r[None, :]
            cell = np.abs(e) if base is BaseLoss.MAE else e * e
            out[i, start:start + chunk] = cell.mean(axis=1)
    return out


def _slope_factors(slopes: np.ndarray, lam: float, base: BaseLoss) -> np.ndarray:
    return np.array([float(factor(float(m), lam, base)) for m in slopes])


def grid_eval(dataset: Dataset, slope_axis: Axis = DEFAULT_SLOPE_AXIS,
              intercept_axis: Axis = DEFAULT_INTERCEPT_AXIS, kind: LossKind = LossKind.LAI_MAE,
              lam: Optional[float] = None) -> LandscapeGrid:
    if dataset.n_features != 1:
        raise DimensionError(f"landscapes need a one-feature dataset, got {dataset.n_features} features")
    if len(dataset) == 0:
        raise DimensionError("landscape of an empty dataset")
    kind = LossKind(kind)
    if kind.is_lai and (lam is None or not lam > 0.0):
        raise ConfigError(f"{kind.value} needs lambda > 0, got {lam}")
    slopes = slope_axis.values
    loss = _plain_grid(dataset.X[:, 0], dataset.y, slopes, intercept_axis.values, kind.base)
    if kind.is_lai:
        loss = loss * _slope_factors(slopes, lam, kind.base)[:, None]
    logger.debug("grid %s lam=%s: %dx%d cells", kind.value, lam, *loss.shape)
    return LandscapeGrid(slope_axis, intercept_axis, loss, kind, lam if kind.is_lai else None)


def grid_argmin(grid: LandscapeGrid) -> Tuple[float, float, float]:
    """(slope, intercept, loss) of the smallest cell; ties go to the smaller slope, then intercept."""
    if grid.loss.size == 0:
        raise DimensionError("empty grid")
    i, j = np.unravel_index(int(np.argmin(grid.loss)), grid.loss.shape)
    return float(grid.slope_axis.values[i]), float(grid.intercept_axis.values[j]), float(grid.loss[i, j])


def landscape_sweep(dataset: Dataset, kind: LossKind, lambdas: Sequence[float],
                    slope_axis: Axis = DEFAULT_SLOPE_AXIS,
                    intercept_axis: Axis = DEFAULT_INTERCEPT_AXIS) -> List[LandscapeGrid]:
    """One grid per lambda; the plain surface is computed once."""
    kind = LossKind(kind)
    if not kind.is_lai:
        return [grid_eval(dataset, slope_axis, intercept_axis, kind)]
    plain = grid_eval(dataset, slope_axis, intercept_axis, LossKind(kind.base.value))
    grids = []
    for lam in lambdas:
        if not lam > 0.0:
            raise ConfigError(f"lambda must be > 0, got {lam}")
        scaled = plain.loss * _slope_factors(slope_axis.values, lam, kind.base)[:, None]
        grids.append(LandscapeGrid(slope_axis, intercept_axis, scaled, kind, lam))
    return grids


def grid_frame(grid: LandscapeGrid) -> pd.DataFrame:
    slopes, intercepts = np.meshgrid(grid.slope_axis.values, grid.intercept_axis.values, indexing="ij")
    return pd.DataFrame({"slope": slopes.ravel(), "intercept": intercepts.ravel(), "loss": grid.loss.ravel()})


def export_grid(grid: LandscapeGrid, path: Path) -> Path:
    """CSV rows (slope, intercept, loss) in row-major order."""
    return write_csv(grid_frame(grid), path)


def load_grid(path: Path) -> LandscapeGrid:
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=np.float64, float_precision="round_trip")
    except FileNotFoundError as exc:
        raise IoError(f"grid not found: {path}", path=str(path)) from exc
    except (pd.errors.EmptyDataError, pd.errors.ParserError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if list(frame.columns) != ["slope", "intercept", "loss"] or frame.empty:
        raise ParseError(f"{path}: expected slope,intercept,loss rows")
    slopes = pd.unique(frame["slope"])
    intercepts = pd.unique(frame["intercept"])
    if slopes.shape[0] * intercepts.shape[0] != frame.shape[0]:
        raise ParseError(f"{path}: rows do not form a full grid")
    return LandscapeGrid(Axis(float(slopes[0]), float(slopes[-1]), slopes.shape[0]),
                         Axis(float(intercepts[0]), float(intercepts[-1]), intercepts.shape[0]),
                         frame["loss"].to_numpy().reshape(slopes.shape[0], intercepts.shape[0]))
