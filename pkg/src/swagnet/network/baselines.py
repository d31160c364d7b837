"""
Baseline fully connected networks used for comparison.

A to E reproduce the five function-approximation listings layer by layer,
including dropout placed after the output neuron where the listing has it.
``soft_plus_te`` in listing E is taken to be softplus.
"""

from __future__ import annotations

from swagnet.activations.base import RELU, SIGMOID, SOFTMAX, SOFTPLUS, TANH, ActivationTag
from swagnet.errors import ConfigError
from swagnet.network.builder import Init, build_model
from swagnet.network.config import AffineSpec, DropoutSpec, LayerSpec, ModelConfig
from swagnet.network.model import Model
from swagnet.numeric.rng import Rng

_D = "dropout"

# (width, activation) pairs; _D marks Dropout(0.2)
_LISTINGS: dict[str, tuple[tuple[int, ActivationTag] | str, ...]] = {
    "A": ((10, RELU), (20, SIGMOID), (30, TANH), (20, RELU), (15, SIGMOID), (25, RELU),
          (10, RELU), (1, TANH), _D),
    "B": ((5, RELU), (10, RELU), (50, TANH), (18, RELU), (15, TANH), (18, SIGMOID), _D,
          (8, RELU), _D, (1, RELU)),
    "C": ((5, RELU), (10, RELU), (20, TANH), (15, RELU), (25, TANH), (20, SIGMOID),
          (25, RELU), (20, RELU), _D, (8, RELU), _D, (1, RELU)),
    "D": ((40, RELU), (25, RELU), _D, (1, RELU), _D),
    "E": ((5, SOFTPLUS), (10, SOFTPLUS), (20, TANH), (15, RELU), (25, TANH), (20, SIGMOID),
          (25, RELU), (1, SOFTPLUS), _D),
    "mnist-baseline": ((1024, RELU), (1024, RELU), (10, SOFTMAX)),
}

_INPUT_DIMS = {"mnist-baseline": 784}

EXPECTED_PARAMS = {
    "A": 2476,
    "B": 2272,
    "C": 2747,
    "D": 1131,
    "E": 2076,
    "mnist-baseline": 1_863_690,
}

BASELINE_NAMES = tuple(_LISTINGS)
FUNCTION_BASELINES = ("A", "B", "C", "D", "E")
DROPOUT_RATE = 0.2


def baseline_config(name: str) -> ModelConfig:
    key = _normalize(name)
    layers: list[LayerSpec] = []
    for entry in _LISTINGS[key]:
        if entry == _D:
            layers.append(DropoutSpec(DROPOUT_RATE))
        else:
            width, activation = entry
            layers.append(AffineSpec(out=width, activation=activation))
    name = f"baseline-{key.lower()}" if key in FUNCTION_BASELINES else key
    return ModelConfig(input_dim=_INPUT_DIMS.get(key, 1), layers=tuple(layers), name=name)


def build_baseline(name: str, rng: Rng) -> Model:
    """
    Build one of the comparison networks (Glorot-uniform weights, zero biases).

    Raises:
        ConfigError: for an unknown name or a parameter count that differs from the listing
    """
    key = _normalize(name)
    config = baseline_config(key)
    model = build_model(config, rng, Init.GLOROT_UNIFORM)
    if model.parameter_count() != EXPECTED_PARAMS[key]:
        raise ConfigError(
            f"baseline {key} has {model.parameter_count()} parameters, listing says {EXPECTED_PARAMS[key]}"
        )
    return model


def _normalize(name: str) -> str:
    key = name.strip()
    if key.lower().startswith("baseline-"):
        key = key[len("baseline-"):]
    if key.lower() in ("mnist-baseline", "mnist"):
        return "mnist-baseline"
    key = key.upper()
    if key not in _LISTINGS:
        raise ConfigError(f"unknown baseline '{name}' (choose from {', '.join(BASELINE_NAMES)})")
    return key
