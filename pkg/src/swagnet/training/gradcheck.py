"""
Finite-difference gradient checking.

The numeric pass re-evaluates the loss with every parameter and the batch
promoted to ``np.longdouble``; on platforms where that type is wider than
float64, the central differences stay accurate for the tiny gradients of
high-degree monomial weights.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from swagnet.errors import ConfigError
from swagnet.network.builder import build_swag
from swagnet.network.config import ModelConfig, swag_config
from swagnet.network.model import Model
from swagnet.numeric.matrix import Matrix
from swagnet.numeric.rng import Rng
from swagnet.training.losses import Loss, check_one_hot, log_softmax
from swagnet.training.trainer import loss_and_gradients

logger = logging.getLogger(__name__)

DEFAULT_STEP = 1e-6
TOLERANCE = 1e-5
TARGET_NOISE = 0.1


def _evaluate(model: Model, loss: Loss, x: np.ndarray) -> np.ndarray:
    out = model.forward(x)
    if loss is Loss.CROSS_ENTROPY:
        out = log_softmax(model.logits if model.has_softmax_output else out)
    model.clear_cache()
    return out


def _loss_difference(loss: Loss, plus: np.ndarray, minus: np.ndarray, target: np.ndarray) -> np.longdouble:
    """L(plus) - L(minus), formed from output differences instead of two rounded loss totals."""
    if loss is Loss.CROSS_ENTROPY:
        return -np.sum(target * (plus - minus)) / plus.shape[1]
    return np.sum((plus - minus) * (plus + minus - 2 * target)) / plus.size


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    """Largest entrywise ``|a - n| / max(1e-8, |a| + |n|)``; 0.0 for empty arrays."""
    if analytic.size == 0:
        return 0.0
    scale = np.maximum(1e-8, np.abs(analytic) + np.abs(numeric))
    return float(np.max(np.abs(analytic - numeric) / scale))


def grad_check(model: Model, loss: Loss, x: Matrix, target: Matrix, h: float = DEFAULT_STEP) -> float:
    """
    Compare back-propagated gradients with central differences.

    Returns:
        The largest relative error over all scalar parameters; 0.0 for a model without parameters
    """
    if model.parameter_count() == 0:
        return 0.0
    if loss is Loss.CROSS_ENTROPY:
        check_one_hot(target)
    _, grads = loss_and_gradients(model, loss, x, target)

    originals = [(layer, dict(layer.params)) for layer in model.layers]
    for layer, params in originals:
        for key, value in params.items():
            layer.params[key] = value.astype(np.longdouble)
    x_wide = np.asarray(x, dtype=np.longdouble)
    target_wide = np.asarray(target, dtype=np.longdouble)
    step = np.longdouble(h)

    worst = 0.0
    try:
        for name, param in model.named_parameters().items():
            numeric = np.zeros(param.shape, dtype=np.longdouble)
            for idx in np.ndindex(param.shape):
                saved = param[idx]
                param[idx] = saved + step
                plus = _evaluate(model, loss, x_wide)
                param[idx] = saved - step
                minus = _evaluate(model, loss, x_wide)
                param[idx] = saved
                numeric[idx] = _loss_difference(loss, plus, minus, target_wide) / (2 * step)
            err = relative_error(grads[name].astype(np.longdouble), numeric)
            logger.debug("%s: relative error %.3e", name, err)
            worst = max(worst, err)
    finally:
        for layer, params in originals:
            layer.params.clear()
            layer.params.update(params)
    return worst


@dataclass(frozen=True)
class GradCheckCase:
    k: int
    l: int
    depth: int
    input_dim: int = 2
    output_dim: int = 1
    hidden_width: int = 3
    batch: int = 4

    @property
    def label(self) -> str:
        return f"k={self.k},l={self.l},depth={self.depth}"

    def config(self) -> ModelConfig:
        return swag_config(self.input_dim, self.output_dim, self.k, self.l, depth=self.depth,
                           hidden_width=self.hidden_width, name=f"gradcheck[{self.label}]")


DEFAULT_CASES: tuple[GradCheckCase, ...] = tuple(
    GradCheckCase(k=k, l=l, depth=depth)
    for k, l, depth in itertools.product((1, 2, 8), (1, 5), (2, 4))
)


def parse_case(text: str) -> GradCheckCase:
    """Parse ``"k=4,l=3,depth=4"``; missing keys take the ``GradCheckCase`` defaults."""
    fields: dict[str, int] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = part.partition("=")
        if not sep or key.strip() not in GradCheckCase.__dataclass_fields__:
            raise ConfigError(f"bad gradcheck config item '{part}'")
        try:
            fields[key.strip()] = int(value)
        except ValueError:
            raise ConfigError(f"gradcheck config value '{value}' is not an integer") from None
    if "k" not in fields or "l" not in fields:
        raise ConfigError(f"gradcheck config '{text}' needs at least k and l")
    fields.setdefault("depth", 2)
    return GradCheckCase(**fields)


def check_case(case: GradCheckCase, seed: int, h: float = DEFAULT_STEP) -> float:
    """
    Build the case's SWAG net from ``seed`` and grad-check it on an MSE batch with inputs in [0, 1].

    Targets are the net's own outputs plus N(0, 0.1^2) noise, which keeps the
    finite-difference noise floor well under the 1e-8 error floor.
    """
    rng = Rng(seed)
    model = build_swag(case.config(), rng.split(0))
    data_rng = rng.split(1)
    x = data_rng.uniform(0.0, 1.0, case.input_dim * case.batch).reshape(case.input_dim, case.batch)
    target = model.predict(x) + TARGET_NOISE * data_rng.standard_normal(case.output_dim, case.batch)
    return grad_check(model, Loss.MSE, x, target, h)
