"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Lai Training.

    1. pretrain: plain mini-batch descent on the base loss (MAE or MSE).
    2. lai_train_epoch: each epoch the training set is shuffled and cut into
       batches; a random alpha-fraction of them is trained on the batch Lai
       loss, the rest on the base loss. One optimizer step per batch.

    Every epoch draws from generator(seed, "shuffle", epoch) where ``epoch``
    counts from the first pretraining epoch: first the permutation, then the
    Lai selection. An epoch with alpha = 0 therefore consumes exactly the same
    randomness as a plain epoch and yields bit-identical parameters.

    run_experiment runs split -> standardize -> init -> pretrain -> Lai (or
    baseline) epochs and returns the model, the per-epoch report and a summary.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# trainer.py - pretraining, Lai epochs, experiment protocol
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .datasets import Dataset, Standardization, split, standardize
from .errors import ConfigError, DivergenceError, NonFiniteValue
from .lai_loss import batch_lai_loss_and_grad, traditional_loss_and_grad
from .metrics import output_variance, rmse
from .mlp import MlpModel, init_model, predict_batch
from .optimizers import Optimizer, build_optimizer
from .schemas import AlphaUnit, EpochRecord, ExperimentSummary, TrainConfig, TrainReport
from .seeding import generator

logger = logging.getLogger(__name__)

PHASE_PRETRAIN = "pretrain"
PHASE_LAI = "lai"
PHASE_BASELINE = "baseline"


@dataclass
class ExperimentResult:
    model: MlpModel
    standardization: Standardization
    report: TrainReport
    summary: ExperimentSummary


def lai_batch_count(alpha: float, n_batches: int) -> int:
    """ceil(alpha * n_batches); any alpha > 0 selects at least one batch."""
    if not alpha > 0.0 or n_batches == 0:
        return 0
    # rounding first keeps 0.07 * 100 from becoming 8
    return min(n_batches, max(1, math.ceil(round(alpha * n_batches, 9))))


def make_batches(permutation: np.ndarray, batch_size: int) -> List[np.ndarray]:
    return [permutation[i:i + batch_size] for i in range(0, permutation.shape[0], batch_size)]


def _batch_loss_and_grad(model: MlpModel, X: np.ndarray, y: np.ndarray, config: TrainConfig,
                         lai_rows: Optional[np.ndarray]) -> Tuple[float, np.ndarray]:
    """Loss of one batch; ``lai_rows`` masks the rows trained on the Lai loss."""
    if lai_rows is None or not lai_rows.any():
        return traditional_loss_and_grad(model, X, y, config.spec.base)
    if lai_rows.all():
        result = batch_lai_loss_and_grad(model, X, y, config.spec)
        return result.value, result.gradient
    # size-weighted mix of the two means
    n_lai = int(lai_rows.sum())
    n_plain = X.shape[0] - n_lai
    lai = batch_lai_loss_and_grad(model, X[lai_rows], y[lai_rows], config.spec)
    plain_loss, plain_grad = traditional_loss_and_grad(model, X[~lai_rows], y[~lai_rows], config.spec.base)
    n = float(X.shape[0])
    return ((n_lai * lai.value + n_plain * plain_loss) / n,
            (n_lai * lai.gradient + n_plain * plain_grad) / n)


def _validation_rmse(model: MlpModel, monitor: Dataset) -> float:
    return rmse(predict_batch(model, monitor.X), monitor.y)


def _run_epoch(model: MlpModel, train: Dataset, config: TrainConfig, epoch: int, optimizer: Optimizer,
               val: Optional[Dataset], alpha: float, phase: str) -> EpochRecord:
    if len(train) == 0:
        raise ConfigError("training set is empty")
    started = time.perf_counter()
    rng = generator(config.seed, "shuffle", epoch)
    perm = rng.permutation(len(train))
    batches = make_batches(perm, config.batch_size)

    lai_batches: List[int] = []
    lai_mask: Optional[np.ndarray] = None
    if config.alpha_unit is AlphaUnit.POINTS:
        n_points = lai_batch_count(alpha, len(train))
        lai_mask = np.zeros(len(train), dtype=bool)
        lai_mask[rng.choice(len(train), size=n_points, replace=False)] = True
    else:
        chosen = rng.choice(len(batches), size=lai_batch_count(alpha, len(batches)), replace=False)
        lai_batches = sorted(int(b) for b in chosen)
    lai_set = set(lai_batches)

    total = 0.0
    params = model.parameters()
    for b, idx in enumerate(batches):
        X, y = train.X[idx], train.y[idx]
        if lai_mask is not None:
            rows = lai_mask[idx]
        else:
            rows = np.ones(idx.shape[0], dtype=bool) if b in lai_set else None
        try:
            loss, grad = _batch_loss_and_grad(model, X, y, config, rows)
        except NonFiniteValue as exc:
            raise DivergenceError(f"non-finite value in epoch {epoch}, batch {b}: {exc}", epoch) from exc
        if not (math.isfinite(loss) and np.all(np.isfinite(grad))):
            raise DivergenceError(f"loss diverged in epoch {epoch}, batch {b}", epoch)
        params = optimizer.step(params, grad)
        if not np.all(np.isfinite(params)):
            raise DivergenceError(f"parameters became non-finite in epoch {epoch}, batch {b}", epoch)
        model.set_parameters(params)
        total += loss * idx.shape[0]

    record = EpochRecord(
        epoch=epoch,
        phase=phase,
        train_loss=total / len(train),
        val_rmse=_validation_rmse(model, val if val is not None else train),
        seconds=time.perf_counter() - started if config.record_wall_time else 0.0,
        lai_batches=lai_batches,
        lai_points=int(lai_mask.sum()) if lai_mask is not None else 0,
    )
    logger.info("epoch %d [%s] loss=%.6g val_rmse=%.6g lai=%s", epoch, phase, record.train_loss,
                record.val_rmse, record.lai_points if lai_mask is not None else len(lai_batches))
    return record


def pretrain(model: MlpModel, train: Dataset, config: TrainConfig, *,
             optimizer: Optional[Optimizer] = None, val: Optional[Dataset] = None,
             first_epoch: int = 0) -> List[EpochRecord]:
    """``config.pretrain_epochs`` epochs of plain descent on the base loss; mutates ``model``."""
    optimizer = optimizer or build_optimizer(config.optimizer, model.n_parameters)
    return [_run_epoch(model, train, config, first_epoch + e, optimizer, val, 0.0, PHASE_PRETRAIN)
            for e in range(config.pretrain_epochs)]


def lai_train_epoch(model: MlpModel, train: Dataset, config: TrainConfig, epoch: int, *,
                    optimizer: Optimizer, val: Optional[Dataset] = None,
                    alpha: Optional[float] = None) -> EpochRecord:
    """One Lai Training epoch; baseline_mode forces alpha to 0."""
    if config.baseline_mode:
        return _run_epoch(model, train, config, epoch, optimizer, val, 0.0, PHASE_BASELINE)
    alpha = config.alpha if alpha is None else alpha
    return _run_epoch(model, train, config, epoch, optimizer, val, alpha, PHASE_LAI)


def run_experiment(config: TrainConfig, dataset: Dataset, test: Optional[Dataset] = None) -> ExperimentResult:
    """Full protocol on a raw (unstandardized) dataset."""
    if dataset.n_features == 0:
        raise ConfigError("dataset has no feature columns")
    lambdas = config.spec.lambdas_for(dataset.n_features)
    if test is not None and test.n_features != dataset.n_features:
        raise ConfigError(f"test set has {test.n_features} features, training data has {dataset.n_features}")

    train, val = split(dataset, config.val_fraction, config.seed)
    if test is not None:
        train, val, test = standardize(train, val, test)
    else:
        train, val = standardize(train, val)
    stats = train.standardization

    sizes = [dataset.n_features, *config.model.hidden, 1]
    model = init_model(sizes, config.model.activation, config.seed)
    optimizer = build_optimizer(config.optimizer, model.n_parameters)
    logger.info("training %s on %d samples (%d validation), seed %d%s", sizes, len(train), len(val),
                config.seed, " [baseline]" if config.baseline_mode else "")

    records = pretrain(model, train, config, optimizer=optimizer, val=val)
    for e in range(config.lai_epochs):
        records.append(lai_train_epoch(model, train, config, config.pretrain_epochs + e,
                                       optimizer=optimizer, val=val))

    variance_set = test if test is not None else val
    summary = ExperimentSummary(
        seed=config.seed,
        baseline_mode=config.baseline_mode,
        epochs=len(records),
        final_val_rmse=records[-1].val_rmse if records else _validation_rmse(model, val),
        output_variance=output_variance(model, variance_set.X),
        variance_set="test" if test is not None else "validation",
        lambdas=lambdas,
        alpha=0.0 if config.baseline_mode else config.alpha,
    )
    return ExperimentResult(model, stats, TrainReport(seed=config.seed, records=records), summary)


def run_paired(config: TrainConfig, dataset: Dataset,
               test: Optional[Dataset] = None) -> Tuple[ExperimentResult, ExperimentResult]:
    """The configured run and its baseline twin; both share the seed."""
    control = config.model_copy(update={"baseline_mode": True})
    return run_experiment(config, dataset, test), run_experiment(control, dataset, test)
