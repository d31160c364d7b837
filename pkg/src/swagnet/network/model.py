"""Ordered layer stack with forward and backward passes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from swagnet.activations.base import ActivationKind
from swagnet.errors import ConfigError, DimensionError, StateError
from swagnet.network.config import ModelConfig
from swagnet.network.layers import Dense, Layer
from swagnet.numeric.matrix import Matrix
from swagnet.numeric.rng import Rng


@dataclass
class ParamGrads:
    """Gradients keyed like ``Model.named_parameters()``, plus the input gradient."""
    grads: dict[str, Matrix]
    input_grad: Matrix

    def __getitem__(self, key: str) -> Matrix:
        return self.grads[key]

    def __iter__(self):
        return iter(self.grads)

    def __len__(self) -> int:
        return len(self.grads)


class Model:
    """
    A network built from a ``ModelConfig``.

    A model is single-owner: ``forward`` fills per-layer caches that the
    immediately following ``backward`` consumes.
    """

    def __init__(self, config: ModelConfig, layers: list[Layer]):
        self.config = config
        self.layers = layers
        self._output_layer: Dense | None = next(
            (layer for layer in reversed(layers) if isinstance(layer, Dense)), None
        )

    def __repr__(self) -> str:
        return f"Model(name={self.config.name!r}, layers={len(self.layers)}, params={self.parameter_count()})"

    @property
    def name(self) -> str:
        return self.config.name

    @property
    def has_softmax_output(self) -> bool:
        return self._output_layer is not None and self._output_layer.activation.kind == ActivationKind.SOFTMAX

    @property
    def logits(self) -> Matrix:
        """Pre-activation of the output layer from the last forward pass."""
        if self._output_layer is None:
            raise StateError(f"model '{self.name}' has no output layer")
        return self._output_layer.logits

    def parameter_count(self) -> int:
        return sum(layer.parameter_count() for layer in self.layers)

    def named_parameters(self) -> dict[str, Matrix]:
        """Live parameter arrays keyed ``"<layer name>.<param name>"`` in build order."""
        return {
            f"{layer.name}.{key}": value
            for layer in self.layers
            for key, value in layer.params.items()
        }

    def forward(self, x: Matrix, training: bool = False, rng: Rng | None = None) -> Matrix:
        """
        Run ``x`` (d x n) through every layer.

        Args:
            x: input batch, one sample per column
            training: enables dropout masks (drawn from ``rng``)
        """
        if x.ndim != 2 or x.shape[0] != self.config.input_dim:
            raise DimensionError(
                f"model '{self.name}' expects {self.config.input_dim} x n input, got shape {x.shape}"
            )
        out = x
        for layer in self.layers:
            out = layer.forward(out, training=training, rng=rng)
        return out

    def backward(self, output_grad: Matrix, wrt_logits: bool = False) -> ParamGrads:
        """
        Back-propagate ``output_grad`` and collect every parameter gradient.

        With ``wrt_logits`` the output layer treats ``output_grad`` as the gradient
        of its pre-activation (the fused softmax/cross-entropy path).
        """
        grad = output_grad
        for layer in reversed(self.layers):
            if layer is self._output_layer:
                grad = layer.backward(grad, wrt_logits=wrt_logits)
            else:
                grad = layer.backward(grad)
        grads = {
            f"{layer.name}.{key}": layer.grads[key]
            for layer in self.layers
            for key in layer.params
        }
        return ParamGrads(grads=grads, input_grad=grad)

    def clear_cache(self) -> None:
        for layer in self.layers:
            layer.clear_cache()

    def predict(self, x: Matrix, batch_size: int = 1000) -> Matrix:
        """Inference in column chunks; leaves no caches behind."""
        if batch_size < 1:
            raise ConfigError(f"batch_size must be >= 1, got {batch_size}")
        chunks = []
        for start in range(0, x.shape[1], batch_size):
            chunks.append(self.forward(x[:, start:start + batch_size]))
        self.clear_cache()
        return np.hstack(chunks)

