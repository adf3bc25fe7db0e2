"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    The Lai loss family.

    For a slope k (tan of the tangent angle) the geometric factor is
        MAE, lambda >= 1 :  max(|k|, lambda) / sqrt(1 + k^2)
        MAE, lambda <  1 :  max(|k| / lambda, 1) / sqrt(1 + k^2)
        MSE, lambda >= 1 :  max(k^2, lambda) / (1 + k^2)
        MSE, lambda <  1 :  max(k^2 / lambda, 1) / (1 + k^2)
    and the point loss is |e| * factor_mae or e^2 * factor_mse. The angle is
    never materialised: sin = |k|/sqrt(1+k^2), cos = 1/sqrt(1+k^2).

    Every function accepts floats or diff_engine tape values, so the same code
    gives plain numbers and differentiable graphs.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# lai_loss.py - geometric factors, point loss, high-dim aggregation, batch loss
from __future__ import annotations

import math
from typing import Sequence, Tuple

import numpy as np

from . import diff_engine as de
from .diff_engine import Scalar
from .errors import ConfigError, DimensionError, EmptyBatch
from .mlp import MlpModel, activations, backprop, record_dual
from .schemas import BaseLoss, LaiSpec, Norm


def _check_lambda(lam: float) -> None:
    if not lam > 0.0:
        raise ConfigError(f"lambda must be > 0, got {lam}")


# ---------------- factors ----------------

def mae_factor_upper(k: Scalar, lam: float) -> Scalar:
    return de.maximum(de.absolute(k), lam) / de.sqrt(1.0 + de.square(k))


def mae_factor_lower(k: Scalar, lam: float) -> Scalar:
    return de.maximum(de.absolute(k) / lam, 1.0) / de.sqrt(1.0 + de.square(k))


def mse_factor_upper(k: Scalar, lam: float) -> Scalar:
    k2 = de.square(k)
    return de.maximum(k2, lam) / (1.0 + k2)


def mse_factor_lower(k: Scalar, lam: float) -> Scalar:
    k2 = de.square(k)
    return de.maximum(k2 / lam, 1.0) / (1.0 + k2)


def factor_mae(k: Scalar, lam: float) -> Scalar:
    _check_lambda(lam)
    return mae_factor_upper(k, lam) if lam >= 1.0 else mae_factor_lower(k, lam)


def factor_mse(k: Scalar, lam: float) -> Scalar:
    _check_lambda(lam)
    return mse_factor_upper(k, lam) if lam >= 1.0 else mse_factor_lower(k, lam)


def factor(k: Scalar, lam: float, base: BaseLoss) -> Scalar:
    return factor_mae(k, lam) if BaseLoss(base) is BaseLoss.MAE else factor_mse(k, lam)


# ---------------- point losses ----------------

def lai_point_loss(e: Scalar, k: Scalar, lam: float, base: BaseLoss = BaseLoss.MAE) -> Scalar:
    """|e| * factor_mae(k) for MAE, e^2 * factor_mse(k) for MSE."""
    if BaseLoss(base) is BaseLoss.MAE:
        return de.absolute(e) * factor_mae(k, lam)
    return de.square(e) * factor_mse(k, lam)


def chebyshev_form(e: float, theta: float) -> float:
    """Chebyshev length of the error vector in the frame aligned with the tangent."""
    c, s = math.cos(theta), math.sin(theta)
    rotation = np.array([[c, s], [-s, c]])
    along, across = rotation @ np.array([0.0, e])
    return max(abs(along), abs(across))


def aggregate(v: Sequence[Scalar], norm: Norm, rho: float = 0.5, mean_normalize: bool = False) -> Scalar:
    n = len(v)
    norm = Norm(norm)
    l1 = l2 = None
    if norm in (Norm.L1, Norm.ELASTIC):
        l1 = v[0]
        for term in v[1:]:
            l1 = l1 + term
        if mean_normalize:
            l1 = l1 / n
    if norm in (Norm.L2, Norm.ELASTIC):
        sq = de.square(v[0])
        for term in v[1:]:
            sq = sq + de.square(term)
        l2 = de.sqrt(sq)
        if mean_normalize:
            l2 = l2 / math.sqrt(n)
    if norm is Norm.L1:
        return l1
    if norm is Norm.L2:
        return l2
    return rho * l1 + (1.0 - rho) * l2


def lai_loss_highdim(e: Scalar, k: Sequence[Scalar], spec: LaiSpec) -> Scalar:
    """Norm of the per-direction losses lai_point_loss(e, k_j, lambda_j)."""
    if len(k) == 0:
        raise DimensionError("input gradient is empty")
    lambdas = spec.lambdas_for(len(k))
    v = [lai_point_loss(e, kj, lam, spec.base) for kj, lam in zip(k, lambdas)]
    return aggregate(v, spec.norm, spec.rho, spec.mean_normalize)


# ---------------- batch losses ----------------

def _check_batch(X: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.shape[0] == 0:
        raise EmptyBatch("batch has no samples")
    if X.ndim != 2 or y.shape != (X.shape[0],):
        raise DimensionError(f"inconsistent batch shapes X{X.shape} y{y.shape}")
    return X, y


def record_batch_lai_loss(tape: de.Tape, model: MlpModel, params: Sequence[de.Var],
                          X: np.ndarray, y: np.ndarray, spec: LaiSpec) -> de.Var:
    """Mean over rows of lai_loss_highdim, recorded on ``tape`` as a function of ``params``."""
    X, y = _check_batch(X, y)
    spec.lambdas_for(X.shape[1])
    total = None
    for row, target in zip(X.tolist(), y.tolist()):
        y_hat, k = record_dual(tape, model, params, tape.variables(row))
        term = lai_loss_highdim(y_hat - target, k, spec)
        total = term if total is None else total + term
    return total / float(X.shape[0])


def batch_lai_loss_and_grad(model: MlpModel, X: np.ndarray, y: np.ndarray, spec: LaiSpec) -> de.GradResult:
    tape = de.Tape()
    params = tape.variables(model.parameters().tolist())
    loss = record_batch_lai_loss(tape, model, params, X, y, spec)
    return de.GradResult(loss.value, np.asarray(tape.grad(loss, params), dtype=np.float64))


def batch_lai_loss(model: MlpModel, X: np.ndarray, y: np.ndarray, spec: LaiSpec) -> float:
    tape = de.Tape()
    params = tape.variables(model.parameters().tolist())
    return record_batch_lai_loss(tape, model, params, X, y, spec).value


def traditional_loss_and_grad(model: MlpModel, X: np.ndarray, y: np.ndarray,
                              base: BaseLoss) -> Tuple[float, np.ndarray]:
    """Plain MAE / MSE of a batch and its parameter gradient (vectorised)."""
    X, y = _check_batch(X, y)
    n = X.shape[0]

    acts = activations(model, X)
    r = acts[-1][:, 0] - y
    if BaseLoss(base) is BaseLoss.MAE:
        loss, d_out = float(np.mean(np.abs(r))), np.sign(r) / n
    else:
        loss, d_out = float(np.mean(r * r)), 2.0 * r / n
    return loss, backprop(model, acts, d_out)
