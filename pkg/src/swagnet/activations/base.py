"""Activation tags and the monomial basis switch."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from swagnet.errors import ConfigError

MAX_DEGREE = 20


class ActivationKind(Enum):
    MONOMIAL = "monomial"
    SIGMOID = "sigmoid"
    TANH = "tanh"
    RELU = "relu"
    LINEAR = "linear"
    SOFTMAX = "softmax"
    SOFTPLUS = "softplus"


class Basis(Enum):
    """Scaling of the monomial activations: ``x^p / p!`` or plain ``x^p``."""
    FACTORIAL = "factorial"
    PLAIN = "plain"


@dataclass(frozen=True)
class ActivationTag:
    kind: ActivationKind
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == ActivationKind.MONOMIAL:
            check_degree(self.p)
        elif self.p is not None:
            raise ConfigError(f"{self.kind.value} takes no degree, got p={self.p}")

    @classmethod
    def monomial(cls, p: int) -> "ActivationTag":
        return cls(ActivationKind.MONOMIAL, p)

    @classmethod
    def parse(cls, text: str) -> "ActivationTag":
        """Parse ``"relu"``, ``"softmax"``, ``"monomial:3"`` and friends."""
        name, _, degree = text.partition(":")
        try:
            kind = ActivationKind(name.strip().lower())
        except ValueError:
            raise ConfigError(f"unknown activation '{text}'") from None
        if kind == ActivationKind.MONOMIAL:
            if not degree.strip().isdigit():
                raise ConfigError(f"monomial activation needs a degree, got '{text}'")
            return cls(kind, int(degree))
        return cls(kind)

    def __str__(self) -> str:
        if self.kind == ActivationKind.MONOMIAL:
            return f"monomial:{self.p}"
        return self.kind.value


def check_degree(p: int | None) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= MAX_DEGREE:
        raise ConfigError(f"monomial degree must be an integer in [1, {MAX_DEGREE}], got {p!r}")
    return p


SIGMOID = ActivationTag(ActivationKind.SIGMOID)
TANH = ActivationTag(ActivationKind.TANH)
RELU = ActivationTag(ActivationKind.RELU)
LINEAR = ActivationTag(ActivationKind.LINEAR)
SOFTMAX = ActivationTag(ActivationKind.SOFTMAX)
SOFTPLUS = ActivationTag(ActivationKind.SOFTPLUS)
