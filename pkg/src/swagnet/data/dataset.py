"""
In-memory datasets and the two function-approximation protocols.

Experiment 1 draws inputs uniformly from (eps, 1 - eps); experiment 2 uses the
fixed grids 0.01, 0.02, ..., 1.00 (train) and 0.015, 0.025, ..., 0.985 (test).
Only inputs are ever normalized; regression targets keep their raw range.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Optional, Union

import numpy as np

from swagnet.data.targets import TargetFunction, eval_target
from swagnet.errors import DimensionError, DomainError
from swagnet.numeric.matrix import Matrix
from swagnet.numeric.rng import Rng

logger = logging.getLogger(__name__)

EXPERIMENT1_TRAIN = 1000
EXPERIMENT1_TEST = 200
SAMPLE_EPS = 1e-6
NUM_CLASSES = 10


class Protocol(Enum):
    RANDOM = "random"
    GRID = "grid"


@dataclass(frozen=True)
class DatasetMeta:
    source: str
    seed: Optional[int] = None
    protocol: Optional[Protocol] = None
    normalized: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "seed": self.seed,
            "protocol": self.protocol.value if self.protocol else None,
            "normalized": self.normalized,
        }


@dataclass(frozen=True)
class Dataset:
    """``inputs`` is d x n, ``targets`` is o x n; both are read-only after construction."""
    inputs: Matrix
    targets: Matrix
    meta: DatasetMeta = field(default_factory=lambda: DatasetMeta(source="custom"))

    def __post_init__(self):
        if self.inputs.ndim != 2 or self.targets.ndim != 2:
            raise DimensionError("dataset inputs and targets must be 2-D")
        if self.inputs.shape[1] != self.targets.shape[1]:
            raise DimensionError(
                f"{self.inputs.shape[1]} input columns but {self.targets.shape[1]} target columns"
            )
        self.inputs.setflags(write=False)
        self.targets.setflags(write=False)

    def __len__(self) -> int:
        return self.inputs.shape[1]

    @property
    def input_dim(self) -> int:
        return self.inputs.shape[0]

    @property
    def output_dim(self) -> int:
        return self.targets.shape[0]


def _function_dataset(which: TargetFunction, x: np.ndarray, meta: DatasetMeta) -> Dataset:
    x = np.ascontiguousarray(x, dtype=np.float64)
    return Dataset(
        inputs=x.reshape(1, -1),
        targets=np.asarray(eval_target(which, x), dtype=np.float64).reshape(1, -1),
        meta=meta,
    )


def make_experiment1(which: Union[str, TargetFunction], seed: int) -> tuple[Dataset, Dataset]:
    """
    1000 train and 200 test inputs drawn uniformly from (1e-6, 1 - 1e-6).

    The train draws come first from ``Rng(seed)``, then the test draws.
    """
    which = TargetFunction.parse(which)
    rng = Rng(seed)
    x_train = rng.uniform(SAMPLE_EPS, 1.0 - SAMPLE_EPS, EXPERIMENT1_TRAIN)
    x_test = rng.uniform(SAMPLE_EPS, 1.0 - SAMPLE_EPS, EXPERIMENT1_TEST)
    train = _function_dataset(which, x_train, DatasetMeta(which.name, seed, Protocol.RANDOM))
    test = _function_dataset(which, x_test, DatasetMeta(which.name, seed, Protocol.RANDOM))
    logger.info("experiment 1 on %s: %d train / %d test samples", which.name, len(train), len(test))
    return train, test


def experiment2_grids() -> tuple[np.ndarray, np.ndarray]:
    # index scaling keeps every grid point exact to one rounding
    train = np.arange(1, 101, dtype=np.float64) / 100.0
    test = (2.0 * np.arange(0, 98, dtype=np.float64) + 3.0) / 200.0
    return train, test


def make_experiment2(which: Union[str, TargetFunction]) -> tuple[Dataset, Dataset]:
    which = TargetFunction.parse(which)
    x_train, x_test = experiment2_grids()
    train = _function_dataset(which, x_train, DatasetMeta(which.name, None, Protocol.GRID))
    test = _function_dataset(which, x_test, DatasetMeta(which.name, None, Protocol.GRID))
    logger.info("experiment 2 on %s: %d train / %d test samples", which.name, len(train), len(test))
    return train, test


def make_experiment(which: Union[str, TargetFunction], experiment: int, seed: int) -> tuple[Dataset, Dataset]:
    if experiment == 1:
        return make_experiment1(which, seed)
    if experiment == 2:
        return make_experiment2(which)
    raise DomainError(f"experiment must be 1 or 2, got {experiment}")


def normalize_unit(x: Matrix) -> Matrix:
    """
    Per-row min-max scaling into [0, 1]; constant rows map to 0.

    Rows that already span exactly [0, 1] come back unchanged.
    """
    x = np.asarray(x, dtype=np.float64)
    lo = np.min(x, axis=1, keepdims=True)
    hi = np.max(x, axis=1, keepdims=True)
    span = hi - lo
    safe = np.where(span > 0.0, span, 1.0)
    out = (x - lo) / safe
    return np.where(span > 0.0, out, 0.0)


def normalize_inputs(train: Dataset, test: Dataset) -> tuple[Dataset, Dataset]:
    """Apply ``normalize_unit`` to the inputs of both splits independently."""
    return (
        replace(train, inputs=normalize_unit(train.inputs), meta=replace(train.meta, normalized=True)),
        replace(test, inputs=normalize_unit(test.inputs), meta=replace(test.meta, normalized=True)),
    )


def one_hot(label: int, num_classes: int = NUM_CLASSES) -> np.ndarray:
    if not 0 <= int(label) < num_classes:
        raise DomainError(f"label must lie in 0..{num_classes - 1}, got {label}")
    out = np.zeros(num_classes, dtype=np.float64)
    out[int(label)] = 1.0
    return out


def one_hot_matrix(labels: np.ndarray, num_classes: int = NUM_CLASSES) -> Matrix:
    """``num_classes x n`` matrix with column j the one-hot encoding of ``labels[j]``."""
    labels = np.asarray(labels).reshape(-1).astype(np.int64)
    if labels.size and (labels.min() < 0 or labels.max() >= num_classes):
        raise DomainError(f"labels must lie in 0..{num_classes - 1}, got range [{labels.min()}, {labels.max()}]")
    out = np.zeros((num_classes, labels.size), dtype=np.float64)
    out[labels, np.arange(labels.size)] = 1.0
    return out
