"""
@Author: Lailoss Team
@Version: 1.0
@Since: 10/16/2026

Usage:
    Save/load helpers for model checkpoints.
    A checkpoint is a flat JSON key-value document:
        layer_sizes, activation, weights.<i> / biases.<i> (row-major decimal
        floats), and optionally standardization.mean / standardization.std.

Change Log:
    Version 1.0 (10/16/2026): Implemented save/load helpers
"""
# checkpoints.py - model persistence used by commands
import json
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from .datasets import Standardization
from .errors import ConfigError, IoError
from .mlp import MlpModel


def checkpoint_document(model: MlpModel, standardization: Optional[Standardization] = None) -> dict:
    doc = {"layer_sizes": list(model.layer_sizes), "activation": model.activation.value}
    for i, (w, b) in enumerate(zip(model.weights, model.biases)):
        doc[f"weights.{i}"] = w.ravel().tolist()
        doc[f"biases.{i}"] = b.tolist()
    if standardization is not None:
        doc["standardization.mean"] = standardization.mean.tolist()
        doc["standardization.std"] = standardization.std.tolist()
    return doc


def save_checkpoint(path: Path, model: MlpModel, standardization: Optional[Standardization] = None) -> Path:
    path = Path(path)
    try:
        path.write_text(json.dumps(checkpoint_document(model, standardization), indent=1) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write checkpoint {path}: {exc}", path=str(path)) from exc
    return path


def load_checkpoint(path: Path) -> Tuple[MlpModel, Optional[Standardization]]:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"checkpoint not found: {path}") from exc
    except (OSError, json.JSONDecodeError) as exc:
        raise IoError(f"cannot read checkpoint {path}: {exc}", path=str(path)) from exc

    try:
        sizes = [int(s) for s in doc["layer_sizes"]]
        weights, biases = [], []
        for i, (n_in, n_out) in enumerate(zip(sizes[:-1], sizes[1:])):
            weights.append(np.asarray(doc[f"weights.{i}"], dtype=np.float64).reshape(n_out, n_in))
            biases.append(np.asarray(doc[f"biases.{i}"], dtype=np.float64))
        model = MlpModel(tuple(sizes), weights, biases, doc.get("activation", "tanh"))
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"malformed checkpoint {path}: {exc}") from exc

    standardization = None
    if "standardization.mean" in doc:
        standardization = Standardization(np.asarray(doc["standardization.mean"], dtype=np.float64),
                                          np.asarray(doc["standardization.std"], dtype=np.float64))
    return model, standardization
