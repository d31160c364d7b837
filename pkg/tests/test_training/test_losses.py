"""Tests for the loss functions."""

import math

import numpy as np
import pytest

from swagnet.errors import DimensionError, DomainError
from swagnet.training.losses import Loss, compute_loss, mse_loss, softmax_cross_entropy


class TestMSE:
    def test_perfect_fit(self):
        y = np.array([[1.0, -2.0, 3.0]])
        loss, grad = mse_loss(y, y.copy())
        assert loss == 0.0
        assert not grad.any()

    def test_mean_of_squares(self):
        loss, _ = mse_loss(np.array([[0.0, 0.0]]), np.array([[1.0, 1.0]]))
        assert loss == 1.0

    def test_doubling_residual_quadruples_loss(self):
        rng = np.random.default_rng(0)
        target = rng.normal(size=(2, 5))
        residual = rng.normal(size=(2, 5))
        a, _ = mse_loss(target + residual, target)
        b, _ = mse_loss(target + 2.0 * residual, target)
        assert b == pytest.approx(4.0 * a, rel=1e-12)

    def test_gradient_predicts_first_order_change(self):
        rng = np.random.default_rng(1)
        pred = rng.normal(size=(3, 4))
        target = rng.normal(size=(3, 4))
        loss, grad = mse_loss(pred, target)
        delta = 1e-5 * rng.normal(size=(3, 4))
        moved, _ = mse_loss(pred + delta, target)
        assert abs(moved - loss - np.sum(grad * delta)) < 1e-9

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            mse_loss(np.zeros((1, 3)), np.zeros((3, 1)))


class TestSoftmaxCrossEntropy:
    def test_uniform_logits(self):
        onehot = np.eye(10)[:, [4]]
        loss, _ = softmax_cross_entropy(np.zeros((10, 1)), onehot)
        assert loss == pytest.approx(math.log(10), rel=1e-15)

    def test_confident_correct_prediction(self):
        logits = np.array([[1000.0], [0.0], [0.0]])
        loss, _ = softmax_cross_entropy(logits, np.array([[1.0], [0.0], [0.0]]))
        assert loss == 0.0

    def test_extreme_logits_stay_finite(self):
        logits = np.array([[1000.0], [-1000.0]])
        loss, grad = softmax_cross_entropy(logits, np.array([[0.0], [1.0]]))
        assert loss == pytest.approx(2000.0)
        assert np.all(np.isfinite(grad))

    def test_gradient_columns_sum_to_zero(self):
        rng = np.random.default_rng(2)
        logits = rng.normal(size=(10, 6))
        onehot = np.eye(10)[:, rng.integers(0, 10, 6)]
        _, grad = softmax_cross_entropy(logits, onehot)
        np.testing.assert_allclose(grad.sum(axis=0), np.zeros(6), atol=1e-12)

    def test_gradient_matches_finite_difference(self):
        rng = np.random.default_rng(3)
        logits = rng.normal(size=(10, 5))
        onehot = np.eye(10)[:, rng.integers(0, 10, 5)]
        _, grad = softmax_cross_entropy(logits, onehot)
        h = 1e-6
        numeric = np.zeros_like(logits)
        for idx in np.ndindex(logits.shape):
            plus = logits.copy()
            plus[idx] += h
            minus = logits.copy()
            minus[idx] -= h
            numeric[idx] = (softmax_cross_entropy(plus, onehot)[0] - softmax_cross_entropy(minus, onehot)[0]) / (2 * h)
        np.testing.assert_allclose(grad, numeric, rtol=1e-6, atol=1e-9)

    @pytest.mark.parametrize("target", [
        np.array([[0.5], [0.5]]),
        np.array([[1.0], [1.0]]),
        np.array([[0.0], [0.0]]),
    ])
    def test_rejects_non_one_hot(self, target):
        with pytest.raises(DomainError):
            softmax_cross_entropy(np.zeros((2, 1)), target)

    def test_compute_loss_dispatch(self):
        pred = np.array([[0.0]])
        assert compute_loss(Loss.MSE, pred, np.array([[2.0]]))[0] == 4.0
        assert compute_loss(Loss.CROSS_ENTROPY, pred, np.array([[1.0]]))[0] == 0.0
