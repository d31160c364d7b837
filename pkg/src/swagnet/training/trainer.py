"""
Mini-batch training loop and chunked evaluation.

Randomness: the epoch shuffles come from ``Rng(seed).split(2)`` and the dropout
masks from ``Rng(seed).split(3)``, so a run is fully determined by its seed,
config and data. Streams 0 and 1 are left to data sampling and weight init.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional

import numpy as np

from swagnet.data.dataset import Dataset
from swagnet.errors import ConfigError, DimensionError, NumericError
from swagnet.network.model import Model, ParamGrads
from swagnet.numeric.matrix import Matrix
from swagnet.numeric.rng import Rng
from swagnet.training.adam import AdamConfig, AdamState, adam_step
from swagnet.training.losses import Loss, is_one_hot, mse_loss, softmax_cross_entropy
from swagnet.training.metrics import accuracy, labels_from_one_hot
from swagnet.utils.io import write_csv

logger = logging.getLogger(__name__)

SHUFFLE_STREAM = 2
DROPOUT_STREAM = 3


@dataclass(frozen=True)
class FitOptions:
    epochs: int = 50
    batch_size: int = 10
    loss: Loss = Loss.MSE
    seed: int = 0
    adam: AdamConfig = field(default_factory=AdamConfig)
    eval_chunk: int = 1000

    def __post_init__(self):
        if self.epochs < 0:
            raise ConfigError(f"epochs must be >= 0, got {self.epochs}")
        if self.batch_size < 1:
            raise ConfigError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.eval_chunk < 1:
            raise ConfigError(f"eval_chunk must be >= 1, got {self.eval_chunk}")
        if self.seed < 0:
            raise ConfigError(f"seed must be >= 0, got {self.seed}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "epochs": self.epochs,
            "batch_size": self.batch_size,
            "loss": self.loss.value,
            "seed": self.seed,
            "adam": self.adam.to_dict(),
            "eval_chunk": self.eval_chunk,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FitOptions":
        try:
            return cls(
                epochs=int(data["epochs"]),
                batch_size=int(data["batch_size"]),
                loss=Loss(data["loss"]),
                seed=int(data["seed"]),
                adam=AdamConfig.from_dict(data.get("adam", {})),
                eval_chunk=int(data.get("eval_chunk", 1000)),
            )
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"invalid fit options: {e}") from e


@dataclass(frozen=True)
class EpochRecord:
    epoch: int
    train_loss: float
    test_loss: float
    test_accuracy: Optional[float] = None


@dataclass
class TrainReport:
    config_name: str
    seed: int
    classification: bool = False
    records: list[EpochRecord] = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def header(self) -> list[str]:
        header = ["epoch", "train_loss", "test_loss"]
        if self.classification:
            header.append("test_accuracy")
        return header

    def rows(self) -> list[list[Any]]:
        rows = []
        for record in self.records:
            row: list[Any] = [record.epoch, record.train_loss, record.test_loss]
            if self.classification:
                row.append(record.test_accuracy)
            rows.append(row)
        return rows

    @property
    def final(self) -> Optional[EpochRecord]:
        return self.records[-1] if self.records else None

    def to_csv(self, path: str) -> str:
        return write_csv(path, self.header, self.rows())


def loss_and_gradients(
    model: Model,
    loss: Loss,
    x: Matrix,
    target: Matrix,
    training: bool = False,
    rng: Optional[Rng] = None,
) -> tuple[float, ParamGrads]:
    """
    Forward ``x``, score it against ``target`` and back-propagate.

    Cross-entropy on a softmax-output model takes the fused path: the loss is
    computed from the output logits and the gradient enters below the softmax.
    On any other output the network output itself is treated as the logits.
    """
    out = model.forward(x, training=training, rng=rng)
    if loss is Loss.CROSS_ENTROPY:
        fused = model.has_softmax_output
        value, grad = softmax_cross_entropy(model.logits if fused else out, target)
        return value, model.backward(grad, wrt_logits=fused)
    value, grad = mse_loss(out, target)
    return value, model.backward(grad)


def evaluate(model: Model, dataset: Dataset, loss: Loss, chunk_size: int = 1000) -> tuple[float, Optional[float]]:
    """
    Loss over the whole dataset, plus accuracy when the targets are one-hot classes.

    Inference runs in column chunks of ``chunk_size`` and leaves no caches behind.
    """
    fused = loss is Loss.CROSS_ENTROPY and model.has_softmax_output
    outputs = []
    for start in range(0, len(dataset), chunk_size):
        out = model.forward(dataset.inputs[:, start:start + chunk_size])
        outputs.append(model.logits if fused else out)
    model.clear_cache()
    scores = np.hstack(outputs)
    if loss is Loss.CROSS_ENTROPY:
        value, _ = softmax_cross_entropy(scores, dataset.targets)
    else:
        value, _ = mse_loss(scores, dataset.targets)
    if not has_class_targets(dataset):
        return value, None
    return value, accuracy(scores, labels_from_one_hot(dataset.targets))


def has_class_targets(dataset: Dataset) -> bool:
    """One-hot targets over two or more classes, whatever loss the run trains with."""
    return dataset.output_dim > 1 and is_one_hot(dataset.targets)


def _check_dataset(model: Model, dataset: Dataset, split: str) -> None:
    if dataset.input_dim != model.config.input_dim or dataset.output_dim != model.config.output_dim:
        raise DimensionError(
            f"{split} data is {dataset.input_dim} -> {dataset.output_dim} but model '{model.name}' "
            f"maps {model.config.input_dim} -> {model.config.output_dim}"
        )
    if len(dataset) == 0:
        raise DimensionError(f"{split} data is empty")


def fit(
    model: Model,
    train: Dataset,
    test: Dataset,
    opts: FitOptions,
    on_epoch: Optional[Callable[[EpochRecord], None]] = None,
) -> TrainReport:
    """
    Train ``model`` in place with Adam and return the per-epoch losses.

    Each epoch shuffles the training indices, runs every full batch plus one
    remainder batch, then evaluates the full train and test sets.

    Raises:
        DimensionError: if the datasets do not match the model widths
        NumericError: if a loss or gradient goes non-finite; the message carries epoch and batch
    """
    _check_dataset(model, train, "train")
    _check_dataset(model, test, "test")
    report = TrainReport(
        config_name=model.name,
        seed=opts.seed,
        classification=has_class_targets(test),
    )
    base_rng = Rng(opts.seed)
    shuffle_rng = base_rng.split(SHUFFLE_STREAM)
    dropout_rng = base_rng.split(DROPOUT_STREAM)
    state = AdamState.fresh(opts.adam)
    params = model.named_parameters()
    n = len(train)
    started = time.perf_counter()

    for epoch in range(1, opts.epochs + 1):
        order = shuffle_rng.permutation(n)
        for batch, start in enumerate(range(0, n, opts.batch_size)):
            idx = order[start:start + opts.batch_size]
            try:
                value, grads = loss_and_gradients(
                    model, opts.loss, train.inputs[:, idx], train.targets[:, idx],
                    training=True, rng=dropout_rng,
                )
                if not np.isfinite(value):
                    raise NumericError(f"loss is {value}")
                adam_step(params, grads.grads, state)
            except NumericError as e:
                model.clear_cache()
                raise NumericError(f"epoch {epoch}, batch {batch}: {e}") from e

        train_loss, _ = evaluate(model, train, opts.loss, opts.eval_chunk)
        test_loss, test_accuracy = evaluate(model, test, opts.loss, opts.eval_chunk)
        if not (np.isfinite(train_loss) and np.isfinite(test_loss)):
            raise NumericError(f"epoch {epoch}: non-finite evaluation loss (train {train_loss}, test {test_loss})")
        record = EpochRecord(epoch, train_loss, test_loss, test_accuracy)
        report.records.append(record)
        if test_accuracy is None:
            logger.info("%s epoch %d/%d: train %.6g, test %.6g",
                        model.name, epoch, opts.epochs, train_loss, test_loss)
        else:
            logger.info("%s epoch %d/%d: train %.6g, test %.6g, accuracy %.4f",
                        model.name, epoch, opts.epochs, train_loss, test_loss, test_accuracy)
        if on_epoch is not None:
            on_epoch(record)

    report.wall_seconds = time.perf_counter() - started
    return report
