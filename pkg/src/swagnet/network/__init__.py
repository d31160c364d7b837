"""Layer objects, the SWAG builder, baseline networks and checkpoints."""

from swagnet.network.baselines import (
    BASELINE_NAMES,
    EXPECTED_PARAMS,
    FUNCTION_BASELINES,
    baseline_config,
    build_baseline,
)
from swagnet.network.builder import Init, build_model, build_swag, exact_polynomial_weights
from swagnet.network.checkpoint import load_checkpoint, save_checkpoint
from swagnet.network.config import (
    AffineSpec,
    DropoutSpec,
    LayerSpec,
    ModelConfig,
    MonomialBlockSpec,
    swag_config,
)
from swagnet.network.layers import Dense, Dropout, Layer, MonomialBlock
from swagnet.network.model import Model, ParamGrads

__all__ = [
    "AffineSpec",
    "BASELINE_NAMES",
    "Dense",
    "Dropout",
    "DropoutSpec",
    "EXPECTED_PARAMS",
    "FUNCTION_BASELINES",
    "Init",
    "Layer",
    "LayerSpec",
    "Model",
    "ModelConfig",
    "MonomialBlock",
    "MonomialBlockSpec",
    "ParamGrads",
    "baseline_config",
    "build_baseline",
    "build_model",
    "build_swag",
    "exact_polynomial_weights",
    "load_checkpoint",
    "save_checkpoint",
    "swag_config",
]
