"""
Declarative network descriptions.

A ``ModelConfig`` is an input width plus an ordered tuple of layer specs. Widths
are inferred while walking the tuple, so a spec never stores its own input width.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from swagnet.activations.base import LINEAR, ActivationKind, ActivationTag, Basis, check_degree
from swagnet.errors import ConfigError


@dataclass(frozen=True)
class MonomialBlockSpec:
    """k parallel affine sub-layers of l neurons, sub-layer p activated by sigma_p."""
    k: int
    l: int

    def __post_init__(self) -> None:
        check_degree(self.k)
        if self.l < 1:
            raise ConfigError(f"monomial block needs l >= 1, got {self.l}")

    def output_width(self, input_width: int) -> int:
        return self.l * self.k

    def parameter_count(self, input_width: int) -> int:
        return self.k * (self.l * input_width + self.l)

    def to_dict(self) -> dict[str, Any]:
        return {"type": "monomial_block", "k": self.k, "l": self.l}


@dataclass(frozen=True)
class AffineSpec:
    out: int
    activation: ActivationTag = LINEAR

    def __post_init__(self) -> None:
        if self.out < 1:
            raise ConfigError(f"affine layer needs out >= 1, got {self.out}")
        if self.activation.kind == ActivationKind.MONOMIAL:
            raise ConfigError("monomial activations belong in a MonomialBlockSpec")

    def output_width(self, input_width: int) -> int:
        return self.out

    def parameter_count(self, input_width: int) -> int:
        return self.out * input_width + self.out

    def to_dict(self) -> dict[str, Any]:
        return {"type": "affine", "out": self.out, "activation": str(self.activation)}


@dataclass(frozen=True)
class DropoutSpec:
    rate: float = 0.2

    def __post_init__(self) -> None:
        if not 0.0 <= self.rate < 1.0:
            raise ConfigError(f"dropout rate must be in [0, 1), got {self.rate}")

    def output_width(self, input_width: int) -> int:
        return input_width

    def parameter_count(self, input_width: int) -> int:
        return 0

    def to_dict(self) -> dict[str, Any]:
        return {"type": "dropout", "rate": self.rate}


LayerSpec = Union[MonomialBlockSpec, AffineSpec, DropoutSpec]


def layer_spec_from_dict(data: dict[str, Any]) -> LayerSpec:
    kind = data.get("type")
    if kind == "monomial_block":
        return MonomialBlockSpec(k=int(data["k"]), l=int(data["l"]))
    if kind == "affine":
        return AffineSpec(out=int(data["out"]), activation=ActivationTag.parse(data["activation"]))
    if kind == "dropout":
        return DropoutSpec(rate=float(data["rate"]))
    raise ConfigError(f"unknown layer type {kind!r}")


@dataclass(frozen=True)
class ModelConfig:
    input_dim: int
    layers: tuple[LayerSpec, ...]
    name: str = "model"
    basis: Basis = Basis.FACTORIAL
    widths: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.input_dim < 1:
            raise ConfigError(f"input_dim must be >= 1, got {self.input_dim}")
        object.__setattr__(self, "layers", tuple(self.layers))
        parameterized = [spec for spec in self.layers if not isinstance(spec, DropoutSpec)]
        if not parameterized:
            raise ConfigError(f"config '{self.name}' has no parameterized layers")
        if not isinstance(parameterized[-1], AffineSpec):
            raise ConfigError(f"config '{self.name}' must end with an affine layer")
        widths = [self.input_dim]
        for spec in self.layers:
            widths.append(spec.output_width(widths[-1]))
        object.__setattr__(self, "widths", tuple(widths))

    @property
    def output_dim(self) -> int:
        return self.widths[-1]

    @property
    def is_swag(self) -> bool:
        """True when parameterized layers alternate block, affine, block, affine, ..."""
        parameterized = [spec for spec in self.layers if not isinstance(spec, DropoutSpec)]
        if len(parameterized) % 2:
            return False
        return all(
            isinstance(spec, MonomialBlockSpec if i % 2 == 0 else AffineSpec)
            for i, spec in enumerate(parameterized)
        )

    @property
    def output_activation(self) -> ActivationTag:
        last = [spec for spec in self.layers if isinstance(spec, AffineSpec)][-1]
        return last.activation

    def parameter_count(self) -> int:
        """Closed-form parameter count summed over the layer specs."""
        return sum(spec.parameter_count(width) for spec, width in zip(self.layers, self.widths))

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "input_dim": self.input_dim,
            "basis": self.basis.value,
            "layers": [spec.to_dict() for spec in self.layers],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ModelConfig":
        try:
            return cls(
                input_dim=int(data["input_dim"]),
                layers=tuple(layer_spec_from_dict(item) for item in data["layers"]),
                name=str(data.get("name", "model")),
                basis=Basis(data.get("basis", Basis.FACTORIAL.value)),
            )
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"invalid model config: {e}") from e


def swag_config(
    input_dim: int,
    output_dim: int,
    k: int,
    l: int,
    depth: int = 2,
    hidden_width: int = 50,
    output_activation: ActivationTag = LINEAR,
    basis: Basis = Basis.FACTORIAL,
    name: str = "swag",
) -> ModelConfig:
    """
    SWAG stack of ``depth`` layers: (block, affine) pairs repeated ``depth / 2`` times.

    Intermediate affine layers are linear with ``hidden_width`` outputs; the final
    affine layer maps to ``output_dim`` with ``output_activation``.
    """
    if depth < 2 or depth % 2:
        raise ConfigError(f"SWAG depth must be an even number >= 2, got {depth}")
    layers: list[LayerSpec] = []
    for pair in range(depth // 2):
        layers.append(MonomialBlockSpec(k=k, l=l))
        last = pair == depth // 2 - 1
        layers.append(AffineSpec(out=output_dim if last else hidden_width,
                                 activation=output_activation if last else LINEAR))
    return ModelConfig(input_dim=input_dim, layers=tuple(layers), name=name, basis=basis)
