"""
End-to-end experiment runs and their artifacts.

Every run writes into its own directory: ``loss.csv``, ``checkpoint.json``
(``predictions.csv`` for function runs) and a ``manifest.json`` that holds
the argv needed to re-run it.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Optional, Sequence

from swagnet.activations.base import SOFTMAX, Basis
from swagnet.data.dataset import Dataset, make_experiment, normalize_inputs
from swagnet.data.idx import load_mnist
from swagnet.data.targets import TargetFunction
from swagnet.network.baselines import FUNCTION_BASELINES, build_baseline
from swagnet.network.builder import build_swag
from swagnet.network.checkpoint import save_checkpoint
from swagnet.network.config import ModelConfig, swag_config
from swagnet.network.model import Model
from swagnet.numeric.matrix import Matrix
from swagnet.numeric.rng import Rng
from swagnet.profiler import RunProfiler
from swagnet.training.trainer import FitOptions, TrainReport, fit
from swagnet.utils.io import git_blob_hash, save_json, write_csv

logger = logging.getLogger(__name__)

INIT_STREAM = 1
SWAG_ARCH = "swag"
FUNCTION_ARCHS = (SWAG_ARCH,) + tuple(f"baseline-{name.lower()}" for name in FUNCTION_BASELINES)


@dataclass(frozen=True)
class SwagShape:
    """Size of a SWAG network: k monomials of l neurons, ``depth`` layers."""
    k: int
    l: int
    depth: int
    hidden_width: int = 50
    basis: Basis = Basis.FACTORIAL


FUNCTION_SWAG = SwagShape(k=8, l=50, depth=4, hidden_width=50)
MNIST_SWAG = SwagShape(k=7, l=500, depth=2)


@dataclass
class RunResult:
    arch: str
    model: Model
    report: TrainReport
    outputs: dict[str, str] = field(default_factory=dict)


def utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def function_model(arch: str, seed: int, shape: SwagShape = FUNCTION_SWAG) -> Model:
    """Build ``swag`` or ``baseline-a`` .. ``baseline-e`` for scalar regression."""
    rng = Rng(seed).split(INIT_STREAM)
    if arch == SWAG_ARCH:
        config = swag_config(1, 1, shape.k, shape.l, depth=shape.depth,
                             hidden_width=shape.hidden_width, basis=shape.basis, name="swag")
        return build_swag(config, rng)
    return build_baseline(arch, rng)


def mnist_model(arch: str, seed: int, shape: SwagShape = MNIST_SWAG) -> Model:
    """Build the MNIST SWAG net (softmax over 10 classes) or the 1024-1024-10 baseline."""
    rng = Rng(seed).split(INIT_STREAM)
    if arch == SWAG_ARCH:
        config = swag_config(784, 10, shape.k, shape.l, depth=shape.depth, hidden_width=shape.hidden_width,
                             output_activation=SOFTMAX, basis=shape.basis, name="swag-mnist")
        return build_swag(config, rng)
    return build_baseline("mnist-baseline", rng)


def function_data(function: str, experiment: int, seed: int, normalize: bool = False) -> tuple[Dataset, Dataset]:
    train, test = make_experiment(TargetFunction.parse(function), experiment, seed)
    if normalize:
        train, test = normalize_inputs(train, test)
    return train, test


def write_predictions(model: Model, test: Dataset, path: str, raw_inputs: Optional[Matrix] = None) -> str:
    """
    ``x, y_true, y_pred`` over the test inputs, one row per sample.

    The model sees ``test.inputs``; the x column is ``raw_inputs`` when given,
    so normalized runs still report the original grid.
    """
    pred = model.predict(test.inputs)
    x = test.inputs if raw_inputs is None else raw_inputs
    rows = zip(x[0].tolist(), test.targets[0].tolist(), pred[0].tolist())
    return write_csv(path, ["x", "y_true", "y_pred"], rows)


def _train(model: Model, train: Dataset, test: Dataset, opts: FitOptions,
           profile_path: Optional[str]) -> TrainReport:
    if profile_path is None:
        return fit(model, train, test, opts)
    profiler = RunProfiler()
    report = profiler.profile_func(
        fit, model, train, test, opts, on_epoch=lambda record: profiler.sample(f"epoch {record.epoch}")
    )
    profiler.save(profile_path)
    return report


def run_function(
    arch: str,
    function: str,
    experiment: int,
    opts: FitOptions,
    out_dir: Optional[str],
    shape: SwagShape = FUNCTION_SWAG,
    normalize: bool = False,
    profile: bool = False,
) -> RunResult:
    """
    Train one architecture on a function-approximation experiment.

    With ``out_dir`` set, writes loss.csv, predictions.csv and checkpoint.json
    (and profile.json when ``profile`` is set).
    """
    raw_train, raw_test = function_data(function, experiment, opts.seed)
    train, test = normalize_inputs(raw_train, raw_test) if normalize else (raw_train, raw_test)
    model = function_model(arch, opts.seed, shape)
    logger.info("training %s (%d parameters) on %s, experiment %d",
                arch, model.parameter_count(), function, experiment)
    profile_path = os.path.join(out_dir, "profile.json") if (profile and out_dir) else None
    report = _train(model, train, test, opts, profile_path)
    result = RunResult(arch=arch, model=model, report=report)
    if out_dir:
        result.outputs = {
            "loss": report.to_csv(os.path.join(out_dir, "loss.csv")),
            "predictions": write_predictions(
                model, test, os.path.join(out_dir, "predictions.csv"), raw_inputs=raw_test.inputs),
            "checkpoint": save_checkpoint(model, os.path.join(out_dir, "checkpoint.json")),
        }
        if profile_path:
            result.outputs["profile"] = profile_path
    return result


def run_mnist(
    arch: str,
    paths: dict[str, str],
    opts: FitOptions,
    out_dir: str,
    shape: SwagShape = MNIST_SWAG,
    profile: bool = False,
) -> RunResult:
    """Train on MNIST; ``paths`` holds images, labels, test_images and test_labels."""
    train = load_mnist(paths["images"], paths["labels"], source="MNIST-train")
    test = load_mnist(paths["test_images"], paths["test_labels"], source="MNIST-test")
    model = mnist_model(arch, opts.seed, shape)
    logger.info("training %s (%d parameters) on %d MNIST images", model.name, model.parameter_count(), len(train))
    profile_path = os.path.join(out_dir, "profile.json") if profile else None
    report = _train(model, train, test, opts, profile_path)
    result = RunResult(arch=arch, model=model, report=report)
    result.outputs = {
        "loss": report.to_csv(os.path.join(out_dir, "loss.csv")),
        "checkpoint": save_checkpoint(model, os.path.join(out_dir, "checkpoint.json")),
    }
    if profile_path:
        result.outputs["profile"] = profile_path
    return result


def run_compare(
    function: str,
    experiment: int,
    opts: FitOptions,
    out_dir: str,
    shape: SwagShape = FUNCTION_SWAG,
    normalize: bool = False,
    jobs: int = 1,
    archs: Sequence[str] = FUNCTION_ARCHS,
) -> dict[str, Any]:
    """
    Train SWAG and the five baselines under the same seed and options.

    Writes ``compare.csv`` (epoch plus one train-loss column per architecture)
    and ``summary.json`` (final losses, architectures ranked by final train loss).
    Each architecture owns its model and generators, so ``jobs > 1`` gives the
    same numbers as a sequential run.
    """
    def one(arch: str) -> RunResult:
        return run_function(arch, function, experiment, opts, None, shape, normalize)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, archs))
    else:
        results = [one(arch) for arch in archs]

    rows = []
    for epoch in range(opts.epochs):
        rows.append([epoch + 1] + [r.report.records[epoch].train_loss for r in results])
    compare_csv = write_csv(os.path.join(out_dir, "compare.csv"), ["epoch", *archs], rows)

    final_train = {r.arch: (r.report.final.train_loss if r.report.final else None) for r in results}
    final_test = {r.arch: (r.report.final.test_loss if r.report.final else None) for r in results}
    ranking = sorted((a for a in archs if final_train[a] is not None), key=lambda a: final_train[a])
    summary = {
        "function": TargetFunction.parse(function).value,
        "experiment": experiment,
        "seed": opts.seed,
        "epochs": opts.epochs,
        "final_train_loss": final_train,
        "final_test_loss": final_test,
        "ranking": ranking,
    }
    summary_json = save_json(summary, os.path.join(out_dir, "summary.json"))
    return {
        "summary": summary,
        "configs": {r.arch: r.model.config.to_dict() for r in results},
        "outputs": {"compare": compare_csv, "summary": summary_json},
    }


def write_manifest(
    out_dir: str,
    command: str,
    argv: Sequence[str],
    config: Optional[ModelConfig],
    opts: FitOptions,
    started: str,
    outputs: dict[str, str],
    extra: Optional[dict[str, Any]] = None,
) -> str:
    """Record everything needed to re-run a command: argv, resolved config, seed and output hashes."""
    manifest: dict[str, Any] = {
        "command": command,
        "argv": list(argv),
        "config": config.to_dict() if config is not None else None,
        "fit": opts.to_dict(),
        "seed": opts.seed,
        "started": started,
        "finished": utc_now(),
        "outputs": {key: os.path.relpath(path, out_dir) for key, path in outputs.items()},
    }
    if "checkpoint" in outputs:
        manifest["checkpoint_sha1"] = git_blob_hash(outputs["checkpoint"])
    if extra:
        manifest.update(extra)
    return save_json(manifest, os.path.join(out_dir, "manifest.json"))

