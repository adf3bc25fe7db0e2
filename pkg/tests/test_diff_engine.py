"""Reverse-mode tape: values, gradients, recorded gradients and the depth limit."""

import numpy as np
import pytest

from lailoss import diff_engine as de
from lailoss.errors import DimensionError, NonFiniteValue, UnsupportedDepth


def _mlp_loss_tape(rng):
    """2-4-1 tanh network with a squared-error loss; leaves are params then inputs."""
    tape = de.Tape()
    params = tape.variables(rng.normal(size=2 * 4 + 4 + 4 + 1).tolist())
    x = tape.variables(rng.normal(size=2).tolist())
    w1, b1, w2, b2 = params[:8], params[8:12], params[12:16], params[16]
    out = b2
    for j in range(4):
        h = de.tanh(b1[j] + w1[2 * j] * x[0] + w1[2 * j + 1] * x[1])
        out = out + w2[j] * h
    de.square(out - 0.3)
    return tape


class TestEvaluate:
    def test_square(self):
        tape = de.Tape()
        x = tape.variable(0.0)
        x * x
        assert de.evaluate(tape, [3.0]) == 9.0

    def test_max(self):
        tape = de.Tape()
        a, b = tape.variables([0.0, 0.0])
        de.maximum(a, b)
        assert de.evaluate(tape, [2.0, 5.0]) == 5.0

    def test_tanh_zero(self):
        tape = de.Tape()
        de.tanh(tape.variable(1.0))
        assert de.evaluate(tape, [0.0]) == 0.0

    def test_leaf_count_mismatch(self):
        tape = de.Tape()
        tape.variable(1.0) * 2.0
        with pytest.raises(DimensionError):
            de.evaluate(tape, [1.0, 2.0])

    def test_non_finite_names_node(self):
        tape = de.Tape()
        x = tape.variable(1.0)
        de.sqrt(x)
        with pytest.raises(NonFiniteValue, match="node"):
            de.evaluate(tape, [-1.0])

    def test_division_by_zero(self):
        tape = de.Tape()
        with pytest.raises(NonFiniteValue):
            1.0 / tape.variable(0.0)


class TestGradient:
    def test_square(self):
        tape = de.Tape()
        x = tape.variable(3.0)
        x * x
        result = de.gradient(tape, [3.0], [0])
        assert result.value == 9.0
        np.testing.assert_array_equal(result.gradient, [6.0])

    def test_max_active_branch(self):
        tape = de.Tape()
        x = tape.variable(-1.0)
        de.maximum(x, 2.0 * x)
        result = de.gradient(tape, [-1.0], [0])
        np.testing.assert_array_equal(result.gradient, [1.0])

    def test_max_tie_routes_to_first_operand(self):
        tape = de.Tape()
        a, b = tape.variables([2.0, 2.0])
        m = de.maximum(a, b)
        assert tape.grad(m, [a, b]) == [1.0, 0.0]

    def test_abs_at_zero(self):
        tape = de.Tape()
        x = tape.variable(0.0)
        assert tape.grad(de.absolute(x), [x]) == [0.0]

    def test_unreached_leaf_gets_zero(self):
        tape = de.Tape()
        x, y = tape.variables([1.0, 2.0])
        z = x * 3.0
        assert tape.grad(z, [x, y]) == [3.0, 0.0]

    def test_mlp_matches_finite_differences(self):
        rng = np.random.default_rng(0)
        tape = _mlp_loss_tape(rng)
        leaves = np.array([tape.nodes[i].value for i in tape.leaves])
        wrt = list(range(len(leaves)))
        analytic = de.gradient(tape, leaves, wrt).gradient
        numeric = de.finite_diff(lambda v: de.evaluate(tape, v), leaves)
        np.testing.assert_allclose(analytic, numeric, rtol=1e-6, atol=1e-9)

    def test_linearity(self):
        rng = np.random.default_rng(1)
        for _ in range(5):
            vals = rng.normal(size=3).tolist()
            a, b = (float(v) for v in rng.normal(size=2))
            tape = de.Tape()
            x = tape.variables(vals)
            f = de.tanh(x[0] * x[1]) + x[2] * x[2]
            g = x[0] / (1.0 + x[1] * x[1]) - de.tanh(x[2])
            combined = a * f + b * g
            grad_f = np.array(tape.grad(f, x))
            grad_g = np.array(tape.grad(g, x))
            grad_c = np.array(tape.grad(combined, x))
            np.testing.assert_allclose(grad_c, a * grad_f + b * grad_g, rtol=1e-12, atol=1e-12)

    def test_deterministic(self):
        leaves = None
        grads = []
        for _ in range(2):
            tape = _mlp_loss_tape(np.random.default_rng(5))
            leaves = [tape.nodes[i].value for i in tape.leaves]
            grads.append(de.gradient(tape, leaves, range(len(leaves))).gradient)
        assert grads[0].tobytes() == grads[1].tobytes()


class TestNestedGradient:
    def test_squared_input_gradient_of_linear(self):
        # outer = (dy/dx)^2 for y = w x  ->  d/dw = 2w
        result = de.nested_gradient(lambda p, x: p[0] * x[0], lambda y, k: k[0] * k[0], [3.0], [1.5])
        assert result.value == 9.0
        np.testing.assert_allclose(result.gradient, [6.0])

    def test_product_of_value_and_input_gradient(self):
        inner = lambda p, x: p[0] * x[0] * x[0]
        outer = lambda y, k: y * k[0]
        result = de.nested_gradient(inner, outer, [1.0], [2.0])
        assert result.value == pytest.approx(16.0)

        def composite(w):
            y = w[0] * 4.0
            return y * (2.0 * w[0] * 2.0)

        np.testing.assert_allclose(result.gradient, de.finite_diff(composite, [1.0]), rtol=1e-6)
        np.testing.assert_allclose(result.gradient, [32.0], rtol=1e-12)

    def test_outer_without_input_gradient_is_plain_gradient(self):
        inner = lambda p, x: de.tanh(p[0] * x[0] + p[1])
        nested = de.nested_gradient(inner, lambda y, k: y * y, [0.4, -0.2], [1.3])

        tape = de.Tape()
        p = tape.variables([0.4, -0.2])
        y = de.tanh(p[0] * 1.3 + p[1])
        plain = tape.grad(y * y, p)
        np.testing.assert_allclose(nested.gradient, plain, rtol=1e-14)

    def test_smooth_composite_matches_finite_differences(self):
        rng = np.random.default_rng(11)
        params = rng.normal(size=3)
        x0 = [0.7, -0.4]

        def inner(p, x):
            return de.tanh(p[0] * x[0] + p[1] * x[1]) * p[2]

        def outer(y, k):
            return y * y + k[0] * k[0] + 0.5 * k[1] * k[1]

        result = de.nested_gradient(inner, outer, params, x0)

        def composite(p):
            return de.nested_gradient(inner, outer, p, x0).value

        np.testing.assert_allclose(result.gradient, de.finite_diff(composite, params), rtol=1e-4, atol=1e-8)

    def test_third_level_is_rejected(self):
        tape = de.Tape()
        w, x = tape.variables([2.0, 3.0])
        (k,) = tape.grad(w * x * x, [x], create_graph=True)
        with pytest.raises(UnsupportedDepth):
            tape.grad(k, [x], create_graph=True)

    def test_second_level_plain_gradient_allowed(self):
        tape = de.Tape()
        w, x = tape.variables([2.0, 3.0])
        (k,) = tape.grad(w * x * x, [x], create_graph=True)   # 2 w x
        assert k.order == 1
        assert tape.grad(k, [w, x]) == [6.0, 4.0]

    def test_replay_after_recorded_gradient_is_rejected(self):
        tape = de.Tape()
        x = tape.variable(2.0)
        (k,) = tape.grad(de.absolute(x) * x, [x], create_graph=True)
        assert k.value == 4.0
        with pytest.raises(UnsupportedDepth):
            de.evaluate(tape, [-2.0])


class TestFiniteDiff:
    def test_quadratic(self):
        np.testing.assert_allclose(de.finite_diff(lambda v: float(v[0] ** 2), [3.0]), [6.0], atol=1e-8)

    def test_abs_at_zero(self):
        np.testing.assert_array_equal(de.finite_diff(lambda v: abs(float(v[0])), [0.0]), [0.0])
