"""
Synthetic target functions.

    F1(x) = x^2/2 - 5/(1+e^x)
    F2(x) = 6x^5 - 3/(1+e^x) + e^x - 9 log10(x)
    F3(x) = 22x^20 - 1/(1+e^x) + 2e^x + 5 log10(x)

Defined on (0, 1]; the log terms diverge at 0.
"""

from __future__ import annotations

from enum import Enum
from typing import Union

import numpy as np

from swagnet.errors import DomainError


class TargetFunction(Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"

    @classmethod
    def parse(cls, name: Union[str, "TargetFunction"]) -> "TargetFunction":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise DomainError(f"unknown target function '{name}' (choose from f1, f2, f3)") from None


def _logistic_term(x: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(x))


def _f1(x: np.ndarray) -> np.ndarray:
    return 0.5 * x ** 2 - 5.0 * _logistic_term(x)


def _f2(x: np.ndarray) -> np.ndarray:
    return 6.0 * x ** 5 - 3.0 * _logistic_term(x) + np.exp(x) - 9.0 * np.log10(x)


def _f3(x: np.ndarray) -> np.ndarray:
    return 22.0 * x ** 20 - _logistic_term(x) + 2.0 * np.exp(x) + 5.0 * np.log10(x)


_FUNCTIONS = {
    TargetFunction.F1: _f1,
    TargetFunction.F2: _f2,
    TargetFunction.F3: _f3,
}


def eval_target(which: Union[str, TargetFunction], x):
    """
    Evaluate F1, F2 or F3 at ``x`` (scalar or array) in float64.

    Raises:
        DomainError: if any x lies outside (0, 1]
    """
    fn = _FUNCTIONS[TargetFunction.parse(which)]
    arr = np.asarray(x, dtype=np.float64)
    if np.any(~(arr > 0.0)) or np.any(arr > 1.0):
        raise DomainError(f"target functions are defined on (0, 1], got values in [{arr.min()}, {arr.max()}]")
    out = fn(arr)
    return float(out) if out.ndim == 0 else out
