"""
Scaled-monomial activations ``sigma_p(z) = z^p / p!``.

The family {sigma_p} for p = 1..k spans the non-constant polynomials of degree
at most k; constants come from the biases. The derivative of sigma_p is
sigma_{p-1}, so ``monomial_backward`` walks one rung down the same ladder.
"""

from __future__ import annotations

import math

import numpy as np

from swagnet.activations.base import MAX_DEGREE, Basis, check_degree
from swagnet.errors import NumericError
from swagnet.numeric.matrix import Matrix

# 20! = 2^18 * 9280784638125, so every entry is exact in float64.
FACTORIALS: tuple[float, ...] = tuple(float(math.factorial(i)) for i in range(MAX_DEGREE + 1))


def monomial_forward(z: Matrix, p: int, basis: Basis = Basis.FACTORIAL, layer: str = "") -> Matrix:
    """
    Elementwise ``z^p / p!`` (``z^p`` under the plain basis).

    Raises:
        ConfigError: if p is outside [1, 20]
        NumericError: if the result overflows; the message names ``layer`` and ``p``
    """
    check_degree(p)
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.power(z, p)
        if basis is Basis.FACTORIAL:
            out = out / FACTORIALS[p]
    if not np.all(np.isfinite(out)):
        where = f"layer {layer}, " if layer else ""
        raise NumericError(f"{where}monomial p={p} produced non-finite activations "
                           f"(max |z| = {float(np.max(np.abs(z))):.6g})")
    return out


def monomial_backward(z: Matrix, p: int, basis: Basis = Basis.FACTORIAL, layer: str = "") -> Matrix:
    """
    Elementwise derivative of ``monomial_forward`` with respect to ``z``.

    Under the factorial basis this is ``monomial_forward(z, p - 1)`` (all ones for p = 1).
    """
    check_degree(p)
    if p == 1:
        return np.ones_like(z)
    if basis is Basis.FACTORIAL:
        return monomial_forward(z, p - 1, basis, layer)
    return p * monomial_forward(z, p - 1, basis, layer)
