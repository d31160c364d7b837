"""Sigmoid, tanh, ReLU, softplus, linear and softmax with their derivatives."""

from __future__ import annotations

import numpy as np

from swagnet.activations.base import ActivationKind, ActivationTag
from swagnet.errors import ConfigError
from swagnet.numeric.matrix import Matrix


def sigmoid(z: Matrix) -> Matrix:
    # tanh form never overflows and gives sigmoid(0) == 0.5 exactly
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def softmax(z: Matrix) -> Matrix:
    """Column-wise softmax, shifted by the column max."""
    shifted = z - np.max(z, axis=0, keepdims=True)
    e = np.exp(shifted)
    return e / np.sum(e, axis=0, keepdims=True)


def softmax_backward(s: Matrix, grad: Matrix) -> Matrix:
    """Jacobian-vector product of softmax given its output ``s`` and upstream ``grad``."""
    return s * (grad - np.sum(grad * s, axis=0, keepdims=True))


_FORWARD = {
    ActivationKind.SIGMOID: sigmoid,
    ActivationKind.TANH: np.tanh,
    ActivationKind.RELU: lambda z: np.maximum(z, 0.0),
    ActivationKind.LINEAR: lambda z: z.copy(),
    ActivationKind.SOFTPLUS: lambda z: np.logaddexp(0.0, z),
    ActivationKind.SOFTMAX: softmax,
}


def _tanh_prime(z: Matrix) -> Matrix:
    t = np.tanh(z)
    return 1.0 - t * t


def _sigmoid_prime(z: Matrix) -> Matrix:
    s = sigmoid(z)
    return s * (1.0 - s)


_BACKWARD = {
    ActivationKind.SIGMOID: _sigmoid_prime,
    ActivationKind.TANH: _tanh_prime,
    # relu'(0) is 0
    ActivationKind.RELU: lambda z: (z > 0).astype(z.dtype),
    ActivationKind.LINEAR: np.ones_like,
    ActivationKind.SOFTPLUS: sigmoid,
}


def classic_forward(z: Matrix, tag: ActivationTag) -> Matrix:
    try:
        fn = _FORWARD[tag.kind]
    except KeyError:
        raise ConfigError(f"{tag} is not a classic activation") from None
    return fn(z)


def classic_backward(z: Matrix, tag: ActivationTag) -> Matrix:
    """
    Elementwise derivative at the pre-activation ``z``.

    Softmax is not elementwise; its derivative is fused into the cross-entropy
    gradient or applied with ``softmax_backward``.
    """
    try:
        fn = _BACKWARD[tag.kind]
    except KeyError:
        raise ConfigError(f"no elementwise derivative for {tag}") from None
    return fn(z)
