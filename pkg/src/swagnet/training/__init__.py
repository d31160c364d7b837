"""Losses, the Adam optimizer, the training loop and gradient checking."""

from swagnet.training.adam import AdamConfig, AdamState, adam_step
from swagnet.training.gradcheck import (
    DEFAULT_CASES,
    TOLERANCE,
    GradCheckCase,
    check_case,
    grad_check,
    parse_case,
    relative_error,
)
from swagnet.training.losses import Loss, compute_loss, mse_loss, softmax_cross_entropy
from swagnet.training.metrics import accuracy, labels_from_one_hot
from swagnet.training.trainer import (
    EpochRecord,
    FitOptions,
    TrainReport,
    evaluate,
    fit,
    loss_and_gradients,
)

__all__ = [
    "AdamConfig",
    "AdamState",
    "DEFAULT_CASES",
    "EpochRecord",
    "FitOptions",
    "GradCheckCase",
    "Loss",
    "TOLERANCE",
    "TrainReport",
    "accuracy",
    "adam_step",
    "check_case",
    "compute_loss",
    "evaluate",
    "fit",
    "grad_check",
    "labels_from_one_hot",
    "loss_and_gradients",
    "mse_loss",
    "parse_case",
    "relative_error",
    "softmax_cross_entropy",
]
