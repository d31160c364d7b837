"""
Adam optimizer.

Moments are kept per parameter name; parameters are updated in place so the
arrays held by the layers stay the live ones.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Mapping

import numpy as np

from swagnet.errors import ConfigError, DimensionError, NumericError
from swagnet.numeric.matrix import Matrix, shape_str


@dataclass(frozen=True)
class AdamConfig:
    lr: float = 0.001
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    def __post_init__(self):
        if not self.lr > 0.0:
            raise ConfigError(f"learning rate must be > 0, got {self.lr}")
        for name in ("beta1", "beta2"):
            value = getattr(self, name)
            if not 0.0 <= value < 1.0:
                raise ConfigError(f"{name} must lie in [0, 1), got {value}")
        if not self.eps > 0.0:
            raise ConfigError(f"eps must be > 0, got {self.eps}")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "AdamConfig":
        return cls(**data)


@dataclass
class AdamState:
    alpha: float
    beta1: float
    beta2: float
    eps: float
    t: int = 0
    m: dict[str, Matrix] = field(default_factory=dict)
    v: dict[str, Matrix] = field(default_factory=dict)

    @classmethod
    def fresh(cls, config: AdamConfig | None = None) -> "AdamState":
        config = config or AdamConfig()
        return cls(alpha=config.lr, beta1=config.beta1, beta2=config.beta2, eps=config.eps)


def adam_step(params: Mapping[str, Matrix], grads: Mapping[str, Matrix], state: AdamState) -> None:
    """
    One bias-corrected Adam update of every entry of ``params``.

    ``t`` is incremented before the bias corrections are formed. Gradients are
    validated before anything is mutated, so a non-finite gradient leaves both
    the parameters and the state untouched.

    Raises:
        DimensionError: if a gradient is missing or its shape differs from the parameter
        NumericError: if a gradient holds NaN or infinity
    """
    for key, param in params.items():
        if key not in grads:
            raise DimensionError(f"no gradient for parameter '{key}'")
        g = grads[key]
        if g.shape != param.shape:
            raise DimensionError(f"gradient for '{key}' is {shape_str(g)}, parameter is {shape_str(param)}")
        if not np.all(np.isfinite(g)):
            raise NumericError(f"non-finite gradient for parameter '{key}'")

    state.t += 1
    bc1 = 1.0 - state.beta1 ** state.t
    bc2 = 1.0 - state.beta2 ** state.t
    for key, param in params.items():
        g = grads[key]
        if key not in state.m:
            state.m[key] = np.zeros_like(param)
            state.v[key] = np.zeros_like(param)
        m = state.m[key]
        v = state.v[key]
        m *= state.beta1
        m += (1.0 - state.beta1) * g
        v *= state.beta2
        v += (1.0 - state.beta2) * (g * g)
        m_hat = m / bc1
        v_hat = v / bc2
        param -= state.alpha * m_hat / (np.sqrt(v_hat) + state.eps)
