"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Parameter update rules over flat float64 parameter vectors.

        state = AdamState.zeros(n)
        params, state = adam_step(params, grads, state, OptimizerConfig())

    The stateful ``Sgd`` / ``Adam`` wrappers are what the trainer holds.

Change Log:
    Version 1.0 (10/16/2026): SGD and bias-corrected Adam
"""
# optimizers.py - SGD / Adam
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .errors import DimensionError
from .schemas import OptimizerConfig, OptimizerKind


@dataclass(frozen=True)
class AdamState:
    m: np.ndarray
    v: np.ndarray
    t: int = 0

    @classmethod
    def zeros(cls, n: int) -> "AdamState":
        return cls(np.zeros(n), np.zeros(n), 0)


def _check_shapes(params: np.ndarray, grads: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    params = np.asarray(params, dtype=np.float64)
    grads = np.asarray(grads, dtype=np.float64)
    if params.shape != grads.shape:
        raise DimensionError(f"parameters {params.shape} and gradient {grads.shape} differ")
    return params, grads


def adam_step(params: np.ndarray, grads: np.ndarray, state: AdamState,
              hyper: OptimizerConfig) -> Tuple[np.ndarray, AdamState]:
    """One bias-corrected Adam update; inputs are not modified."""
    params, grads = _check_shapes(params, grads)
    if state.m.shape != params.shape:
        raise DimensionError(f"optimizer state is for {state.m.shape}, parameters are {params.shape}")
    t = state.t + 1
    m = hyper.beta1 * state.m + (1.0 - hyper.beta1) * grads
    v = hyper.beta2 * state.v + (1.0 - hyper.beta2) * (grads * grads)
    m_hat = m / (1.0 - hyper.beta1 ** t)
    v_hat = v / (1.0 - hyper.beta2 ** t)
    updated = params - hyper.lr * m_hat / (np.sqrt(v_hat) + hyper.eps)
    return updated, AdamState(m, v, t)


def sgd_step(params: np.ndarray, grads: np.ndarray, lr: float) -> np.ndarray:
    params, grads = _check_shapes(params, grads)
    return params - lr * grads


class Sgd:
    def __init__(self, hyper: OptimizerConfig):
        self.hyper = hyper

    def step(self, params: np.ndarray, grads: np.ndarray) -> np.ndarray:
        return sgd_step(params, grads, self.hyper.lr)


class Adam:
    def __init__(self, hyper: OptimizerConfig, n_params: int):
        self.hyper = hyper
        self.state = AdamState.zeros(n_params)

    def step(self, params: np.ndarray, grads: np.ndarray) -> np.ndarray:
        params, self.state = adam_step(params, grads, self.state, self.hyper)
        return params


Optimizer = Union[Sgd, Adam]


def build_optimizer(hyper: OptimizerConfig, n_params: int) -> Optimizer:
    if hyper.kind is OptimizerKind.SGD:
        return Sgd(hyper)
    return Adam(hyper, n_params)
