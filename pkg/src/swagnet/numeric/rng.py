"""
Seeded random number generation.

All randomness in swagnet flows through ``Rng``, a thin single-owner wrapper
around numpy's PCG64 bit generator. Normal draws use numpy's ziggurat sampler,
so an identical seed produces an identical sequence on every platform.

Independent streams are derived with ``Rng.split(stream)``, which seeds a fresh
generator with ``seed + stream``.
"""

from __future__ import annotations

import numpy as np

from swagnet.errors import ConfigError, DimensionError
from swagnet.numeric.matrix import Matrix


class Rng:
    """Deterministic generator; not safe to share across threads."""

    def __init__(self, seed: int):
        if seed < 0:
            raise ConfigError(f"seed must be non-negative, got {seed}")
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def __repr__(self) -> str:
        return f"Rng(seed={self.seed})"

    def split(self, stream: int) -> "Rng":
        """Return an independent generator for ``stream`` (seeded with ``seed + stream``)."""
        return Rng(self.seed + stream)

    def standard_normal(self, rows: int, cols: int) -> Matrix:
        _check_dims(rows, cols)
        return self._gen.standard_normal((rows, cols), dtype=np.float64)

    def uniform(self, low: float, high: float, size: int) -> np.ndarray:
        return self._gen.uniform(low, high, size)

    def glorot_uniform(self, rows: int, cols: int) -> Matrix:
        """Glorot/Xavier uniform weights for a ``rows x cols`` matrix (fan_out x fan_in)."""
        _check_dims(rows, cols)
        limit = np.sqrt(6.0 / (rows + cols))
        return self._gen.uniform(-limit, limit, (rows, cols))

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)

    def bernoulli_mask(self, shape: tuple[int, ...], keep: float) -> np.ndarray:
        """Boolean mask whose entries are True with probability ``keep``."""
        return self._gen.random(shape) < keep


def _check_dims(rows: int, cols: int) -> None:
    if rows < 1 or cols < 1:
        raise DimensionError(f"matrix dimensions must be >= 1, got {rows}x{cols}")


def gaussian_matrix(rng: Rng, rows: int, cols: int) -> Matrix:
    """``rows x cols`` matrix of i.i.d. N(0, 1) draws; advances ``rng``."""
    return rng.standard_normal(rows, cols)
