"""
Layer objects with forward caches.

Every layer follows the same protocol: ``forward`` stores whatever ``backward``
needs, ``backward`` consumes the cache, fills ``grads`` and returns the gradient
with respect to the layer input. Parameters live in ``params`` keyed by name,
so optimizers and checkpoints can address them without knowing the layer type.
"""

from __future__ import annotations

import numpy as np

from swagnet.activations.base import ActivationKind, ActivationTag, Basis
from swagnet.activations.classic import classic_backward, classic_forward, softmax_backward
from swagnet.activations.monomial import monomial_backward, monomial_forward
from swagnet.errors import StateError
from swagnet.numeric.matrix import Matrix, affine, check_finite
from swagnet.numeric.rng import Rng


class Layer:
    """Base class for network layers."""

    def __init__(self, name: str):
        self.name = name
        self.params: dict[str, Matrix] = {}
        self.grads: dict[str, Matrix] = {}

    def forward(self, x: Matrix, training: bool = False, rng: Rng | None = None) -> Matrix:
        raise NotImplementedError

    def backward(self, grad: Matrix) -> Matrix:
        raise NotImplementedError

    def clear_cache(self) -> None:
        raise NotImplementedError

    def parameter_count(self) -> int:
        return sum(p.size for p in self.params.values())


class MonomialBlock(Layer):
    """
    k affine sub-layers sharing the input, sub-layer p followed by sigma_p.

    The k outputs of l rows each are stacked with p ascending into an
    (l*k) x n matrix. Parameters are ``W1..Wk`` (l x d) and ``b1..bk`` (l x 1).
    """

    def __init__(self, name: str, k: int, l: int, basis: Basis = Basis.FACTORIAL):
        super().__init__(name)
        self.k = k
        self.l = l
        self.basis = basis
        self._x: Matrix | None = None
        self._z: list[Matrix] | None = None

    def forward(self, x: Matrix, training: bool = False, rng: Rng | None = None) -> Matrix:
        zs = [affine(self.params[f"W{p}"], self.params[f"b{p}"], x) for p in range(1, self.k + 1)]
        out = np.vstack([
            monomial_forward(z, p, self.basis, layer=self.name) for p, z in enumerate(zs, start=1)
        ])
        # guard against training on Inf even if an individual power stayed finite
        check_finite(out, f"layer {self.name}")
        self._x, self._z = x, zs
        return out

    def backward(self, grad: Matrix) -> Matrix:
        if self._x is None or self._z is None:
            raise StateError(f"layer {self.name}: backward called without a preceding forward")
        x = self._x
        dx = np.zeros_like(x)
        for p, z in enumerate(self._z, start=1):
            rows = slice((p - 1) * self.l, p * self.l)
            dz = grad[rows] * monomial_backward(z, p, self.basis, layer=self.name)
            self.grads[f"W{p}"] = dz @ x.T
            self.grads[f"b{p}"] = np.sum(dz, axis=1, keepdims=True)
            dx += self.params[f"W{p}"].T @ dz
        self.clear_cache()
        return dx

    def clear_cache(self) -> None:
        self._x = None
        self._z = None


class Dense(Layer):
    """Fully connected layer ``act(W x + b)`` with ``W`` (out x d) and ``b`` (out x 1)."""

    def __init__(self, name: str, out: int, activation: ActivationTag):
        super().__init__(name)
        self.out = out
        self.activation = activation
        self._x: Matrix | None = None
        self._z: Matrix | None = None
        self._a: Matrix | None = None

    @property
    def logits(self) -> Matrix:
        """Pre-activation of the most recent forward pass."""
        if self._z is None:
            raise StateError(f"layer {self.name}: no forward cache")
        return self._z

    def forward(self, x: Matrix, training: bool = False, rng: Rng | None = None) -> Matrix:
        z = affine(self.params["W"], self.params["b"], x)
        a = classic_forward(z, self.activation)
        self._x, self._z, self._a = x, z, a
        return a

    def backward(self, grad: Matrix, wrt_logits: bool = False) -> Matrix:
        """
        Args:
            grad: upstream gradient w.r.t. this layer's output, or w.r.t. its
                pre-activation when ``wrt_logits`` is set
        """
        if self._x is None or self._z is None:
            raise StateError(f"layer {self.name}: backward called without a preceding forward")
        if wrt_logits:
            dz = grad
        elif self.activation.kind == ActivationKind.SOFTMAX:
            dz = softmax_backward(self._a, grad)
        else:
            dz = grad * classic_backward(self._z, self.activation)
        self.grads["W"] = dz @ self._x.T
        self.grads["b"] = np.sum(dz, axis=1, keepdims=True)
        dx = self.params["W"].T @ dz
        self.clear_cache()
        return dx

    def clear_cache(self) -> None:
        self._x = None
        self._z = None
        self._a = None


class Dropout(Layer):
    """Inverted dropout: Bernoulli masks scaled by 1/(1-rate) in training, identity otherwise."""

    def __init__(self, name: str, rate: float):
        super().__init__(name)
        self.rate = rate
        self._mask: np.ndarray | None = None
        self._seen_forward = False

    def forward(self, x: Matrix, training: bool = False, rng: Rng | None = None) -> Matrix:
        self._seen_forward = True
        if not training or self.rate == 0.0:
            self._mask = None
            return x
        if rng is None:
            raise StateError(f"layer {self.name}: training-mode dropout needs a generator")
        keep = 1.0 - self.rate
        self._mask = rng.bernoulli_mask(x.shape, keep) / keep
        return x * self._mask

    def backward(self, grad: Matrix) -> Matrix:
        if not self._seen_forward:
            raise StateError(f"layer {self.name}: backward called without a preceding forward")
        out = grad if self._mask is None else grad * self._mask
        self.clear_cache()
        return out

    def clear_cache(self) -> None:
        self._mask = None
        self._seen_forward = False

