"""Loss functions returning ``(loss, gradient)`` pairs."""

from __future__ import annotations

from enum import Enum

import numpy as np

from swagnet.errors import DimensionError, DomainError
from swagnet.numeric.matrix import Matrix, shape_str


class Loss(Enum):
    MSE = "mse"
    CROSS_ENTROPY = "cross_entropy"


def _check_same_shape(a: Matrix, b: Matrix, what: str) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"{what}: prediction is {shape_str(a)} but target is {shape_str(b)}")


def mse_loss(pred: Matrix, target: Matrix) -> tuple[float, Matrix]:
    """
    Mean squared error over all o x n entries.

    Returns:
        ``(sum((pred - target)^2) / (o*n), 2*(pred - target) / (o*n))``
    """
    _check_same_shape(pred, target, "mse_loss")
    diff = pred - target
    count = diff.size
    loss = float(np.sum(diff * diff) / count)
    return loss, 2.0 * diff / count


def is_one_hot(onehot: Matrix) -> bool:
    """True when every column holds exactly one 1 and zeros elsewhere."""
    is_binary = np.all((onehot == 0.0) | (onehot == 1.0))
    return bool(is_binary and np.all(np.sum(onehot, axis=0) == 1.0))


def check_one_hot(onehot: Matrix) -> None:
    if not is_one_hot(onehot):
        raise DomainError("cross-entropy target must be one-hot in every column")


def log_softmax(logits: Matrix) -> Matrix:
    shifted = logits - np.max(logits, axis=0, keepdims=True)
    return shifted - np.log(np.sum(np.exp(shifted), axis=0, keepdims=True))


def softmax_cross_entropy(logits: Matrix, onehot: Matrix) -> tuple[float, Matrix]:
    """
    Mean negative log-likelihood of the labelled class under a column softmax.

    The gradient is taken with respect to ``logits``: ``(softmax(logits) - onehot) / n``.
    """
    _check_same_shape(logits, onehot, "softmax_cross_entropy")
    check_one_hot(onehot)
    n = logits.shape[1]
    log_p = log_softmax(logits)
    loss = float(-np.sum(log_p * onehot) / n)
    return loss, (np.exp(log_p) - onehot) / n


def compute_loss(loss: Loss, output: Matrix, target: Matrix) -> tuple[float, Matrix]:
    if loss is Loss.MSE:
        return mse_loss(output, target)
    return softmax_cross_entropy(output, target)
