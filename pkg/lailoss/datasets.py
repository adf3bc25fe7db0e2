"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Dataset container, CSV ingestion, seeded splits, standardization,
    synthetic generators and per-feature noise injection.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# datasets.py - data in, data split, data generated
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from .errors import ConfigError, DimensionError, IoError, NonFiniteValue, ParseError
from .seeding import generator

logger = logging.getLogger(__name__)

NONLINEAR_FEATURES = 8


@dataclass(frozen=True)
class Standardization:
    mean: np.ndarray
    std: np.ndarray

    def apply(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.shape[1] != self.mean.shape[0]:
            raise DimensionError(f"standardization is for {self.mean.shape[0]} features, got {X.shape[1]}")
        return (X - self.mean) / self.std


@dataclass
class Dataset:
    X: np.ndarray
    y: np.ndarray
    feature_names: List[str] = field(default_factory=list)
    target_name: str = "y"
    standardization: Optional[Standardization] = None

    def __post_init__(self) -> None:
        self.X = np.asarray(self.X, dtype=np.float64)
        self.y = np.asarray(self.y, dtype=np.float64)
        if self.X.ndim != 2 or self.y.ndim != 1:
            raise DimensionError(f"expected X (n, d) and y (n,), got {self.X.shape} and {self.y.shape}")
        if self.X.shape[0] != self.y.shape[0]:
            raise DimensionError(f"X has {self.X.shape[0]} rows but y has {self.y.shape[0]}")
        if not (np.all(np.isfinite(self.X)) and np.all(np.isfinite(self.y))):
            raise NonFiniteValue("dataset values must be finite")
        if not self.feature_names:
            self.feature_names = [f"x{j + 1}" for j in range(self.X.shape[1])]
        if len(self.feature_names) != self.X.shape[1]:
            raise DimensionError(f"{len(self.feature_names)} names for {self.X.shape[1]} features")

    def __len__(self) -> int:
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        return self.X.shape[1]

    def subset(self, indices: np.ndarray) -> "Dataset":
        return replace(self, X=self.X[indices], y=self.y[indices])


# ---------------- ingestion ----------------

def load_csv(path: Path, drop_id: bool = False) -> Dataset:
    """Header row, numeric cells, last column is the target."""
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except FileNotFoundError as exc:
        raise IoError(f"data file not found: {path}", path=str(path)) from exc
    except pd.errors.EmptyDataError as exc:
        raise ParseError(f"{path}: empty file") from exc
    except pd.errors.ParserError as exc:
        raise ParseError(f"{path}: {exc}") from exc

    if drop_id:
        id_columns = [c for c in frame.columns if c.strip().lower() == "id"]
        if not id_columns:
            raise ConfigError(f"{path}: --drop-id given but there is no id column")
        frame = frame.drop(columns=id_columns)
    if frame.shape[1] < 2:
        raise ParseError(f"{path}: need at least one feature column and a target column")
    if frame.shape[0] == 0:
        raise ParseError(f"{path}: no samples after the header")

    raw = frame.apply(lambda col: col.str.strip())
    numeric = raw.apply(lambda col: pd.to_numeric(col, errors="coerce")).astype(np.float64)
    bad = ~np.isfinite(numeric.to_numpy())
    if bad.any():
        r, c = np.argwhere(bad)[0]
        column = str(frame.columns[c])
        cell = raw.iat[r, c]
        what = "missing value" if cell == "" else f"non-numeric value {cell!r}"
        # r is 0-based over data rows; the header is file line 1
        raise ParseError(f"{path}: {what} at row {r + 1} (line {r + 2}), column {column!r}",
                         row=int(r + 1), column=column)

    values = numeric.to_numpy()
    names = [str(c).strip() for c in frame.columns]
    logger.debug("loaded %s: %d rows, %d features", path, values.shape[0], values.shape[1] - 1)
    return Dataset(values[:, :-1], values[:, -1], names[:-1], names[-1])


# ---------------- splits and scaling ----------------

def split(dataset: Dataset, val_fraction: float, seed: int) -> Tuple[Dataset, Dataset]:
    if not 0.0 < val_fraction < 1.0:
        raise ConfigError(f"val_fraction must be in (0, 1), got {val_fraction}")
    n = len(dataset)
    if n < 2:
        raise ConfigError(f"need at least two samples to split, got {n}")
    perm = generator(seed, "split").permutation(n)
    n_val = min(max(int(round(n * val_fraction)), 1), n - 1)
    return dataset.subset(perm[n_val:]), dataset.subset(perm[:n_val])


def fit_standardization(train: Dataset) -> Standardization:
    if len(train) == 0:
        raise ConfigError("cannot standardize an empty training set")
    mean = train.X.mean(axis=0)
    std = train.X.std(axis=0)
    for name, s in zip(train.feature_names, std):
        if not s > 0.0:
            raise ConfigError(f"feature {name!r} has zero variance in the training set")
    return Standardization(mean, std)


def apply_standardization(dataset: Dataset, stats: Standardization) -> Dataset:
    return replace(dataset, X=stats.apply(dataset.X), standardization=stats)


def standardize(train: Dataset, *others: Dataset) -> Tuple[Dataset, ...]:
    """Scale features with training statistics only; targets stay as they are."""
    stats = fit_standardization(train)
    return tuple(apply_standardization(d, stats) for d in (train, *others))


# ---------------- generators ----------------

def gen_linear_band(n: int = 2000, slope: float = 3.0, intercept: float = 4.0,
                    x_half_range: float = 1.0, band_half_width: float = 5.0,
                    seed: int = 0, symmetric: bool = True) -> Dataset:
    """Points spread uniformly in a vertical band around y = slope*x + intercept.

    With ``symmetric`` the samples come in mirrored pairs (x, u), (-x, -u)
    about (0, intercept); an odd n adds the centre point itself.
    """
    if n < 1:
        raise ConfigError(f"n must be >= 1, got {n}")
    if not x_half_range > 0.0 or not band_half_width >= 0.0:
        raise ConfigError("x_half_range must be > 0 and band_half_width >= 0")
    rng = generator(seed, "generator", 0)
    if symmetric:
        half = n // 2
        x_half = rng.uniform(-x_half_range, x_half_range, half)
        u_half = rng.uniform(-1.0, 1.0, half) * band_half_width
        x = np.concatenate([x_half, -x_half, np.zeros(n % 2)])
        u = np.concatenate([u_half, -u_half, np.zeros(n % 2)])
    else:
        x = rng.uniform(-x_half_range, x_half_range, n)
        u = rng.uniform(-1.0, 1.0, n) * band_half_width
    y = slope * x + intercept + u
    return Dataset(x.reshape(-1, 1), y, ["x"], "y")


def nonlinear_target(X: np.ndarray) -> np.ndarray:
    return np.sin(2.0 * X[:, 0]) + 0.5 * X[:, 1] ** 2 + X[:, 2] * X[:, 3] + 3.0 * X[:, 7]


def gen_nonlinear(n: int = 5000, seed: int = 0, noise_sigma: float = 0.1, collinear: bool = False) -> Dataset:
    """Eight standard-normal features; feature 8 carries a large linear coefficient.

    With ``collinear`` feature 7 (unused by the target) is an exact copy of
    feature 8, so the slope on feature 8 can move to feature 7 without
    changing any prediction on the data.
    """
    if n < 1:
        raise ConfigError(f"n must be >= 1, got {n}")
    if noise_sigma < 0.0:
        raise ConfigError(f"noise_sigma must be >= 0, got {noise_sigma}")
    rng = generator(seed, "generator", 1)
    X = rng.standard_normal((n, NONLINEAR_FEATURES))
    noise = rng.normal(0.0, noise_sigma, n) if noise_sigma > 0.0 else np.zeros(n)
    if collinear:
        X[:, 6] = X[:, 7]
    return Dataset(X, nonlinear_target(X) + noise)


def add_gaussian_noise(X: np.ndarray, feature_index: int, sigma: float, seed: int,
                       draw: int = 0) -> np.ndarray:
    """Copy of X with N(0, sigma^2) added to column ``feature_index`` only."""
    X = np.asarray(X, dtype=np.float64)
    if not 0 <= feature_index < X.shape[1]:
        raise DimensionError(f"feature index {feature_index} out of range for {X.shape[1]} features")
    if sigma < 0.0:
        raise ConfigError(f"sigma must be >= 0, got {sigma}")
    out = X.copy()
    if sigma == 0.0:
        return out
    rng = generator(seed, "noise", feature_index, draw)
    out[:, feature_index] = out[:, feature_index] + rng.normal(0.0, sigma, X.shape[0])
    return out
