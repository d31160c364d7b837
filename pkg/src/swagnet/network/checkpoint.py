"""
JSON checkpoints.

Layout::

    {"format_version": 1,
     "config": {...ModelConfig.to_dict()...},
     "parameters": [{"W1": [[...], ...], "b1": [[...]], ...}, ...]}   # one dict per layer

Floats are written as shortest round-trip decimals, so load(save(m)) is bitwise exact.
"""

from __future__ import annotations

import logging
from typing import Any

import numpy as np

from swagnet.errors import FormatError
from swagnet.network.builder import empty_layers, parameter_shapes
from swagnet.network.config import ModelConfig
from swagnet.network.model import Model
from swagnet.utils.io import load_json, save_json

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def checkpoint_dict(model: Model) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "config": model.config.to_dict(),
        "parameters": [
            {key: value.tolist() for key, value in layer.params.items()}
            for layer in model.layers
        ],
    }


def save_checkpoint(model: Model, path: str) -> str:
    save_json(checkpoint_dict(model), path, indent=None)
    logger.info("checkpoint written to %s", path)
    return path


def _group_array(layer: str, key: str, rows: Any, shape: tuple[int, int]) -> np.ndarray:
    try:
        value = np.array(rows, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise FormatError(f"{layer}.{key} is not a numeric matrix ({e})") from e
    if value.shape != shape:
        raise FormatError(f"{layer}.{key} has shape {value.shape}, config needs {shape}")
    return value


def model_from_dict(data: dict[str, Any]) -> Model:
    """Rebuild a model; every parameter name and shape must match the stored config."""
    if data.get("format_version") != FORMAT_VERSION:
        raise FormatError(f"unsupported checkpoint format_version {data.get('format_version')!r}")
    try:
        config = ModelConfig.from_dict(data["config"])
        parameters = data["parameters"]
    except KeyError as e:
        raise FormatError(f"checkpoint is missing key {e}") from e
    layers = empty_layers(config)
    if not isinstance(parameters, list) or len(parameters) != len(layers):
        raise FormatError(f"checkpoint parameters must be a list of {len(layers)} layer groups")
    for layer, group, shapes in zip(layers, parameters, parameter_shapes(config)):
        if not isinstance(group, dict) or set(group) != set(shapes):
            found = sorted(group) if isinstance(group, dict) else type(group).__name__
            raise FormatError(f"{layer.name} holds parameters {found}, config needs {sorted(shapes)}")
        for key, shape in shapes.items():
            layer.params[key] = _group_array(layer.name, key, group[key], shape)
    return Model(config, layers)


def load_checkpoint(path: str) -> Model:
    return model_from_dict(load_json(path))
