"""Activation functions: the scaled-monomial basis and the classic family."""

from swagnet.activations.base import (
    LINEAR,
    MAX_DEGREE,
    RELU,
    SIGMOID,
    SOFTMAX,
    SOFTPLUS,
    TANH,
    ActivationKind,
    ActivationTag,
    Basis,
)
from swagnet.activations.classic import (
    classic_backward,
    classic_forward,
    sigmoid,
    softmax,
    softmax_backward,
)
from swagnet.activations.monomial import FACTORIALS, monomial_backward, monomial_forward

__all__ = [
    "ActivationKind",
    "ActivationTag",
    "Basis",
    "FACTORIALS",
    "LINEAR",
    "MAX_DEGREE",
    "RELU",
    "SIGMOID",
    "SOFTMAX",
    "SOFTPLUS",
    "TANH",
    "classic_backward",
    "classic_forward",
    "monomial_backward",
    "monomial_forward",
    "sigmoid",
    "softmax",
    "softmax_backward",
]
