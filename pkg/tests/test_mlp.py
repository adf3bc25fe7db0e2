"""MLP construction, scalar and vectorised forward passes, input gradients."""

import numpy as np
import pytest

from lailoss import diff_engine as de
from lailoss.errors import ConfigError, DimensionError, NonFiniteValue
from lailoss.mlp import (MlpModel, activations, backprop, init_model, predict, predict_batch,
                         predict_with_input_grad)


def linear(weights, bias):
    w = np.asarray([weights], dtype=float)
    return MlpModel((w.shape[1], 1), [w], [np.array([bias], dtype=float)], "identity")


class TestInitModel:
    def test_same_seed_same_bytes(self):
        a = init_model([8, 16, 1], seed=42)
        b = init_model([8, 16, 1], seed=42)
        assert a.parameters().tobytes() == b.parameters().tobytes()

    def test_different_seed_differs(self):
        assert not np.array_equal(init_model([8, 16, 1], seed=1).parameters(),
                                  init_model([8, 16, 1], seed=2).parameters())

    def test_weight_range_and_zero_bias(self):
        model = init_model([4, 9, 1], seed=0)
        assert np.all(np.abs(model.weights[0]) <= 0.5)
        assert np.all(np.abs(model.weights[1]) <= 1.0 / 3.0)
        assert all(np.all(b == 0.0) for b in model.biases)

    def test_single_layer_identity_is_affine(self):
        model = init_model([1, 1], "identity", seed=0)
        w, b = model.weights[0][0, 0], model.biases[0][0]
        assert predict(model, [2.5]) == w * 2.5 + b

    @pytest.mark.parametrize("sizes", [[8, 0, 1], [], [3], [2, 4, 2], [1, 2, 2, 2, 2, 1], [1, 300, 1]])
    def test_invalid_sizes(self, sizes):
        with pytest.raises(ConfigError):
            init_model(sizes)

    def test_unknown_activation(self):
        with pytest.raises(ConfigError, match="relu"):
            init_model([2, 3, 1], "relu")


class TestPredict:
    def test_affine(self):
        assert predict(linear([2.0], 1.0), [3.0]) == 7.0

    def test_nan_input(self):
        with pytest.raises(NonFiniteValue):
            predict(init_model([2, 3, 1]), [np.nan, 1.0])

    def test_wrong_dimension(self):
        with pytest.raises(DimensionError):
            predict(init_model([2, 3, 1]), [1.0, 2.0, 3.0])

    def test_zero_weights_give_bias_path(self):
        model = MlpModel((2, 3, 1), [np.zeros((3, 2)), np.zeros((1, 3))],
                         [np.array([0.1, 0.2, 0.3]), np.array([-0.7])])
        assert predict(model, [5.0, -2.0]) == -0.7
        assert predict(model, [0.0, 9.0]) == -0.7

    def test_batch_agrees_with_scalar(self):
        model = init_model([3, 5, 4, 1], seed=9)
        X = np.random.default_rng(0).normal(size=(6, 3))
        np.testing.assert_allclose(predict_batch(model, X), [predict(model, x) for x in X], rtol=1e-13)


class TestInputGradient:
    def test_linear_gradient_is_weights(self):
        dual = predict_with_input_grad(linear([2.0, -1.0], 0.0), [0.3, 4.0])
        np.testing.assert_array_equal(dual.k, [2.0, -1.0])
        assert dual.y_hat == 2.0 * 0.3 - 4.0

    def test_y_hat_equals_predict_exactly(self):
        model = init_model([3, 6, 1], seed=4)
        x = [0.2, -1.1, 0.9]
        assert predict_with_input_grad(model, x).y_hat == predict(model, x)

    def test_matches_finite_differences(self):
        model = init_model([1, 4, 1], seed=12)
        model.biases[0] = np.array([0.1, -0.3, 0.2, 0.05])
        for x in (-1.2, 0.0, 0.7):
            k = predict_with_input_grad(model, [x]).k
            fd = de.finite_diff(lambda v: predict(model, v), [x])
            np.testing.assert_allclose(k, fd, rtol=1e-6, atol=1e-10)

    def test_odd_symmetric_model_has_zero_gradient(self):
        model = MlpModel((1, 2, 1), [np.array([[1.0], [-1.0]]), np.array([[1.0, 1.0]])],
                         [np.zeros(2), np.zeros(1)])
        for x in (-2.0, 0.3, 1.7):
            np.testing.assert_allclose(predict_with_input_grad(model, [x]).k, [0.0], atol=1e-15)


class TestBackprop:
    def test_matches_finite_differences(self):
        model = init_model([2, 4, 1], seed=1)
        rng = np.random.default_rng(2)
        X = rng.normal(size=(5, 2))
        d_out = rng.normal(size=5)

        def objective(flat):
            return float(d_out @ predict_batch(model.with_parameters(flat), X))

        grad = backprop(model, activations(model, X), d_out)
        np.testing.assert_allclose(grad, de.finite_diff(objective, model.parameters()), rtol=1e-6, atol=1e-9)

    def test_parameter_layout_round_trip(self):
        model = init_model([3, 2, 1], seed=0)
        flat = np.arange(model.n_parameters, dtype=float)
        clone = model.with_parameters(flat)
        np.testing.assert_array_equal(clone.weights[0], flat[:6].reshape(2, 3))
        np.testing.assert_array_equal(clone.biases[0], flat[6:8])
        np.testing.assert_array_equal(clone.parameters(), flat)
