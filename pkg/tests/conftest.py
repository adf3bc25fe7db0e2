# conftest.py - shared fixtures
import numpy as np
import pandas as pd
import pytest

from lailoss.datasets import Dataset
from lailoss.mlp import init_model


@pytest.fixture
def small_nonlinear():
    """60 rows, 2 features, smooth target."""
    rng = np.random.default_rng(7)
    X = rng.standard_normal((60, 2))
    y = np.sin(X[:, 0]) + 0.5 * X[:, 1]
    return Dataset(X, y, ["a", "b"], "target")


@pytest.fixture
def tiny_model():
    return init_model([2, 3, 1], "tanh", seed=3)


@pytest.fixture
def write_frame(tmp_path):
    def _write(frame: pd.DataFrame, name: str = "data.csv"):
        path = tmp_path / name
        frame.to_csv(path, index=False)
        return path
    return _write
