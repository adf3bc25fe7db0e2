"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Small feed-forward regression model (scalar output).

    Two evaluation paths share one parameter layout:
      * a scalar path (predict, predict_with_input_grad, record_dual) whose
        arithmetic runs either on floats or on diff_engine tape values, so the
        prediction and the input gradient k = dy/dx can be differentiated again
        w.r.t. the parameters;
      * a vectorised numpy path (predict_batch, backprop) used for plain losses
        and metrics.

    Flat parameter order: for each layer, W (out x in, row-major) then b.

Change Log:
    Version 1.0 (10/16/2026): Initial creation
"""
# mlp.py - MLP regression model + input gradients
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from . import diff_engine as de
from .errors import ConfigError, DimensionError, NonFiniteValue
from .schemas import Activation
from .seeding import generator

MAX_HIDDEN_LAYERS = 3
MAX_WIDTH = 256


def validate_layer_sizes(layer_sizes: Sequence[int]) -> Tuple[int, ...]:
    sizes = tuple(layer_sizes)
    if len(sizes) < 2:
        raise ConfigError(f"layer_sizes needs an input and an output size, got {list(sizes)}")
    for s in sizes:
        if isinstance(s, bool) or not isinstance(s, (int, np.integer)) or s <= 0:
            raise ConfigError(f"layer sizes must be positive integers, got {list(sizes)}")
    if sizes[-1] != 1:
        raise ConfigError(f"output size must be 1 (scalar regression), got {sizes[-1]}")
    hidden = sizes[1:-1]
    if len(hidden) > MAX_HIDDEN_LAYERS:
        raise ConfigError(f"at most {MAX_HIDDEN_LAYERS} hidden layers, got {len(hidden)}")
    if any(h > MAX_WIDTH for h in hidden):
        raise ConfigError(f"hidden widths are limited to {MAX_WIDTH}, got {list(hidden)}")
    return tuple(int(s) for s in sizes)


def parse_activation(value) -> Activation:
    try:
        return Activation(value)
    except ValueError:
        known = ", ".join(a.value for a in Activation)
        raise ConfigError(f"unknown activation {value!r}, expected one of: {known}") from None


@dataclass
class MlpModel:
    layer_sizes: Tuple[int, ...]
    weights: List[np.ndarray]
    biases: List[np.ndarray]
    activation: Activation = Activation.TANH

    def __post_init__(self) -> None:
        self.layer_sizes = validate_layer_sizes(self.layer_sizes)
        self.activation = parse_activation(self.activation)
        self.weights = [np.asarray(w, dtype=np.float64) for w in self.weights]
        self.biases = [np.asarray(b, dtype=np.float64) for b in self.biases]
        pairs = list(zip(self.layer_sizes[:-1], self.layer_sizes[1:]))
        if len(self.weights) != len(pairs) or len(self.biases) != len(pairs):
            raise ConfigError("one weight matrix and one bias vector per layer expected")
        for (n_in, n_out), w, b in zip(pairs, self.weights, self.biases):
            if w.shape != (n_out, n_in) or b.shape != (n_out,):
                raise ConfigError(f"layer {n_in}->{n_out} got W{w.shape} b{b.shape}")
        if not np.all(np.isfinite(self.parameters())):
            raise NonFiniteValue("model parameters must be finite")

    @property
    def n_inputs(self) -> int:
        return self.layer_sizes[0]

    @property
    def n_parameters(self) -> int:
        return sum(w.size + b.size for w, b in zip(self.weights, self.biases))

    def parameters(self) -> np.ndarray:
        return np.concatenate([np.concatenate([w.ravel(), b]) for w, b in zip(self.weights, self.biases)])

    def set_parameters(self, flat: Sequence[float]) -> None:
        flat = np.asarray(flat, dtype=np.float64)
        if flat.shape != (self.n_parameters,):
            raise DimensionError(f"expected {self.n_parameters} parameters, got {flat.shape}")
        offset = 0
        for li, (w, b) in enumerate(zip(self.weights, self.biases)):
            self.weights[li] = flat[offset:offset + w.size].reshape(w.shape).copy()
            offset += w.size
            self.biases[li] = flat[offset:offset + b.size].copy()
            offset += b.size

    def with_parameters(self, flat: Sequence[float]) -> "MlpModel":
        clone = MlpModel(self.layer_sizes, [w.copy() for w in self.weights],
                         [b.copy() for b in self.biases], self.activation)
        clone.set_parameters(flat)
        return clone

    def split_parameters(self, flat: Sequence) -> List[Tuple[List[list], list]]:
        """Arrange a flat sequence (floats or tape values) into per-layer rows and biases."""
        layers = []
        offset = 0
        for n_in, n_out in zip(self.layer_sizes[:-1], self.layer_sizes[1:]):
            rows = [list(flat[offset + r * n_in: offset + (r + 1) * n_in]) for r in range(n_out)]
            offset += n_in * n_out
            layers.append((rows, list(flat[offset:offset + n_out])))
            offset += n_out
        return layers


@dataclass(frozen=True)
class DualEvaluation:
    y_hat: float
    k: np.ndarray = field(repr=False)


def init_model(layer_sizes: Sequence[int], activation: Activation = Activation.TANH, seed: int = 0) -> MlpModel:
    """Weights ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in)) from the ``init`` stream, biases zero."""
    sizes = validate_layer_sizes(layer_sizes)
    rng = generator(seed, "init")
    weights, biases = [], []
    for n_in, n_out in zip(sizes[:-1], sizes[1:]):
        bound = 1.0 / math.sqrt(n_in)
        weights.append(rng.uniform(-bound, bound, size=(n_out, n_in)))
        biases.append(np.zeros(n_out))
    return MlpModel(sizes, weights, biases, parse_activation(activation))


def _check_input(model: MlpModel, x: Sequence[float]) -> List[float]:
    values = np.asarray(x, dtype=np.float64).ravel()
    if values.shape[0] != model.n_inputs:
        raise DimensionError(f"model expects {model.n_inputs} features, got {values.shape[0]}")
    if not np.all(np.isfinite(values)):
        raise NonFiniteValue(f"non-finite input {values.tolist()}")
    return values.tolist()


def _forward(layers, x: Sequence, activation: Activation):
    a = list(x)
    last = len(layers) - 1
    for li, (rows, bias) in enumerate(layers):
        out = []
        for row, b in zip(rows, bias):
            z = b
            for w, xi in zip(row, a):
                z = z + w * xi
            if li != last and activation is Activation.TANH:
                z = de.tanh(z)
            out.append(z)
        a = out
    return a[0]


def predict(model: MlpModel, x: Sequence[float]) -> float:
    layers = model.split_parameters(model.parameters().tolist())
    return float(_forward(layers, _check_input(model, x), model.activation))


def record_dual(tape: de.Tape, model: MlpModel, params: Sequence[de.Var],
                x: Sequence[de.Var]) -> Tuple[de.Var, List[de.Var]]:
    """Record y_hat and its recorded input gradient k on ``tape``."""
    y_hat = _forward(model.split_parameters(params), x, model.activation)
    k = tape.grad(y_hat, list(x), create_graph=True)
    return y_hat, k


def predict_with_input_grad(model: MlpModel, x: Sequence[float]) -> DualEvaluation:
    values = _check_input(model, x)
    tape = de.Tape()
    params = tape.variables(model.parameters().tolist())
    y_hat, k = record_dual(tape, model, params, tape.variables(values))
    return DualEvaluation(y_hat.value, np.array([kj.value for kj in k]))


# ---------------- vectorised path ----------------

def _check_batch(model: MlpModel, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.n_inputs:
        raise DimensionError(f"model expects (n, {model.n_inputs}) inputs, got {X.shape}")
    return X


def activations(model: MlpModel, X: np.ndarray) -> List[np.ndarray]:
    """Layer outputs, input first."""
    acts = [_check_batch(model, X)]
    last = len(model.weights) - 1
    for li, (w, b) in enumerate(zip(model.weights, model.biases)):
        z = acts[-1] @ w.T + b
        if li != last and model.activation is Activation.TANH:
            z = np.tanh(z)
        acts.append(z)
    return acts


def predict_batch(model: MlpModel, X: np.ndarray) -> np.ndarray:
    return activations(model, X)[-1][:, 0]


def backprop(model: MlpModel, acts: List[np.ndarray], d_out: np.ndarray) -> np.ndarray:
    """Flat parameter gradient of sum(d_out * outputs) given cached ``activations``."""
    delta = np.asarray(d_out, dtype=np.float64).reshape(-1, 1)
    grads: List[Tuple[np.ndarray, np.ndarray]] = []
    for li in range(len(model.weights) - 1, -1, -1):
        a_prev = acts[li]
        grads.append((delta.T @ a_prev, delta.sum(axis=0)))
        if li > 0:
            delta = delta @ model.weights[li]
            if model.activation is Activation.TANH:
                delta = delta * (1.0 - a_prev * a_prev)
    grads.reverse()
    return np.concatenate([np.concatenate([gw.ravel(), gb]) for gw, gb in grads])
