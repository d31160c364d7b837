"""Model construction from configs, including the exact-polynomial witness."""

from __future__ import annotations

import logging
from enum import Enum
from typing import Sequence

import numpy as np

from swagnet.activations.base import LINEAR, Basis
from swagnet.activations.monomial import FACTORIALS
from swagnet.errors import ConfigError
from swagnet.network.config import AffineSpec, DropoutSpec, ModelConfig, MonomialBlockSpec
from swagnet.network.layers import Dense, Dropout, Layer, MonomialBlock
from swagnet.network.model import Model
from swagnet.numeric.rng import Rng, gaussian_matrix

logger = logging.getLogger(__name__)


class Init(Enum):
    NORMAL = "normal"
    GLOROT_UNIFORM = "glorot_uniform"


def _weights(rng: Rng, rows: int, cols: int, init: Init) -> np.ndarray:
    if init is Init.NORMAL:
        return gaussian_matrix(rng, rows, cols)
    return rng.glorot_uniform(rows, cols)


def empty_layers(config: ModelConfig) -> list[Layer]:
    """Layer objects for ``config`` with no parameters assigned yet."""
    layers: list[Layer] = []
    for index, spec in enumerate(config.layers):
        if isinstance(spec, MonomialBlockSpec):
            layers.append(MonomialBlock(f"block_{index}", spec.k, spec.l, config.basis))
        elif isinstance(spec, AffineSpec):
            layers.append(Dense(f"dense_{index}", spec.out, spec.activation))
        elif isinstance(spec, DropoutSpec):
            layers.append(Dropout(f"dropout_{index}", spec.rate))
        else:
            raise ConfigError(f"unsupported layer spec {spec!r}")
    return layers


def parameter_shapes(config: ModelConfig) -> list[dict[str, tuple[int, int]]]:
    """Parameter names and shapes per layer, in the order ``build_model`` creates them."""
    groups: list[dict[str, tuple[int, int]]] = []
    for spec, width in zip(config.layers, config.widths):
        group: dict[str, tuple[int, int]] = {}
        if isinstance(spec, MonomialBlockSpec):
            for p in range(1, spec.k + 1):
                group[f"W{p}"] = (spec.l, width)
                group[f"b{p}"] = (spec.l, 1)
        elif isinstance(spec, AffineSpec):
            group = {"W": (spec.out, width), "b": (spec.out, 1)}
        groups.append(group)
    return groups


def build_model(
    config: ModelConfig,
    rng: Rng,
    init: Init = Init.NORMAL,
    dense_init: Init | None = None,
) -> Model:
    """
    Instantiate ``config`` with weights drawn from ``rng``.

    Monomial blocks use ``init``; affine layers use ``dense_init`` (``init`` if unset).
    Draw order is layer-major and, inside a monomial block, p ascending.
    Biases start at zero. The parameter count is checked against the
    closed form of the config.
    """
    dense_init = init if dense_init is None else dense_init
    layers = empty_layers(config)
    for layer, width in zip(layers, config.widths):
        if isinstance(layer, MonomialBlock):
            for p in range(1, layer.k + 1):
                layer.params[f"W{p}"] = _weights(rng, layer.l, width, init)
                layer.params[f"b{p}"] = np.zeros((layer.l, 1))
        elif isinstance(layer, Dense):
            out = layer.out
            layer.params["W"] = _weights(rng, out, width, dense_init)
            layer.params["b"] = np.zeros((out, 1))

    model = Model(config, layers)
    expected = config.parameter_count()
    actual = model.parameter_count()
    if actual != expected:
        raise ConfigError(f"model '{config.name}' has {actual} parameters, closed form gives {expected}")
    logger.debug("built %s with %d parameters (%s / %s init)", config.name, actual, init.value, dense_init.value)
    return model


def build_swag(config: ModelConfig, rng: Rng) -> Model:
    """
    Build a SWAG network.

    Monomial sub-layer weights are drawn from N(0, 1); the linear layers between
    and after the blocks get Glorot-uniform weights.
    """
    if not config.is_swag:
        raise ConfigError(f"config '{config.name}' does not alternate monomial blocks and affine layers")
    return build_model(config, rng, Init.NORMAL, dense_init=Init.GLOROT_UNIFORM)


def exact_polynomial_weights(coeffs: Sequence[float], basis: Basis = Basis.FACTORIAL) -> Model:
    """
    Two-layer SWAG model on scalar input computing ``sum_p coeffs[p] * x^p``.

    The block uses l = 1 and W_p = [1], b_p = 0, so slot p holds sigma_p(x).
    The output weight for slot p undoes the scaling (``a_p * p!`` under the
    factorial basis) and the output bias carries ``a_0``.
    """
    coeffs = [float(c) for c in coeffs]
    if not coeffs:
        raise ConfigError("need at least one coefficient")
    k = max(1, len(coeffs) - 1)
    coeffs = coeffs + [0.0] * (k + 1 - len(coeffs))
    config = ModelConfig(
        input_dim=1,
        layers=(MonomialBlockSpec(k=k, l=1), AffineSpec(out=1, activation=LINEAR)),
        name=f"poly_deg{k}",
        basis=basis,
    )
    block = MonomialBlock("block_0", k, 1, basis)
    for p in range(1, k + 1):
        block.params[f"W{p}"] = np.ones((1, 1))
        block.params[f"b{p}"] = np.zeros((1, 1))
    out = Dense("dense_1", 1, LINEAR)
    scale = FACTORIALS if basis is Basis.FACTORIAL else [1.0] * len(FACTORIALS)
    out.params["W"] = np.array([[coeffs[p] * scale[p] for p in range(1, k + 1)]])
    out.params["b"] = np.array([[coeffs[0]]])
    return Model(config, [block, out])
