"""Classification metrics."""

from __future__ import annotations

import numpy as np

from swagnet.errors import DimensionError
from swagnet.numeric.matrix import Matrix


def labels_from_one_hot(onehot: Matrix) -> np.ndarray:
    return np.argmax(onehot, axis=0)


def accuracy(logits: Matrix, labels: np.ndarray) -> float:
    """
    Fraction of columns whose argmax equals the label.

    Ties resolve to the lowest class index (``np.argmax`` returns the first maximum).
    """
    labels = np.asarray(labels).reshape(-1)
    if logits.ndim != 2 or logits.shape[1] != labels.size:
        raise DimensionError(f"{labels.size} labels for logits of shape {logits.shape}")
    return float(np.mean(np.argmax(logits, axis=0) == labels))
