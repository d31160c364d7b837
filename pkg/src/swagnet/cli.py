#!/usr/bin/env python3
"""
Command-line interface for swagnet.

Exit codes: 0 on success, 1 on a numeric or other runtime failure, 2 on a
usage or input error (bad flags, malformed files, missing paths).
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from swagnet.activations.base import Basis
from swagnet.errors import INPUT_ERRORS, FormatError, NumericError
from swagnet.experiments import (
    FUNCTION_ARCHS,
    FUNCTION_SWAG,
    MNIST_SWAG,
    SWAG_ARCH,
    SwagShape,
    run_compare,
    run_function,
    run_mnist,
    utc_now,
    write_manifest,
)
from swagnet.training import (
    DEFAULT_CASES,
    TOLERANCE,
    AdamConfig,
    FitOptions,
    Loss,
    check_case,
    parse_case,
)
from swagnet.utils.io import load_json

TRAINING_COMMANDS = ("train-func", "train-mnist", "compare", "rerun")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress at INFO level")
    parser.add_argument("-q", "--quiet", action="store_true", help="Log warnings and errors only")
    return parser


def _training_parser(defaults: SwagShape) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--seed", type=int, default=0, help="Seed for data sampling, initialization and shuffling")
    parser.add_argument("--out", required=True, help="Directory to write the run artifacts to")
    parser.add_argument("--lr", type=float, default=AdamConfig.lr, help="Adam learning rate")
    parser.add_argument("--beta1", type=float, default=AdamConfig.beta1, help="Adam first-moment decay")
    parser.add_argument("--beta2", type=float, default=AdamConfig.beta2, help="Adam second-moment decay")
    parser.add_argument("--eps", type=float, default=AdamConfig.eps, help="Adam stabilizer")
    parser.add_argument("--k", type=int, default=defaults.k, help="Monomials per SWAG block")
    parser.add_argument("--l", type=int, default=defaults.l, help="Neurons per monomial")
    parser.add_argument("--depth", type=int, default=defaults.depth, help="SWAG layers (even)")
    parser.add_argument("--hidden-width", type=int, default=defaults.hidden_width,
                        help="Width of intermediate linear layers")
    parser.add_argument("--basis", choices=[b.value for b in Basis], default=Basis.FACTORIAL.value,
                        help="Monomial scaling: x^p/p! or x^p")
    parser.add_argument("--profile", action="store_true", help="Write profile.json with CPU and memory statistics")
    return parser


def parse_args(args: List[str]) -> argparse.Namespace:
    """Parse command line arguments."""
    formatter = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog="swagnet",
        description="swagnet - train SWAG networks and their baselines, writing CSV/JSON artifacts.",
        formatter_class=formatter,
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    common = _common_parser()

    # Function approximation
    func_parser = subparsers.add_parser(
        "train-func", help="Train one architecture on F1/F2/F3",
        parents=[common, _training_parser(FUNCTION_SWAG)], formatter_class=formatter,
    )
    func_parser.add_argument("--function", required=True, choices=["f1", "f2", "f3"], help="Target function")
    func_parser.add_argument("--experiment", type=int, choices=[1, 2], default=1,
                             help="1: random inputs, 2: fixed grids")
    func_parser.add_argument("--arch", choices=list(FUNCTION_ARCHS), default=SWAG_ARCH, help="Architecture")
    func_parser.add_argument("--epochs", type=int, default=50, help="Training epochs")
    func_parser.add_argument("--batch-size", type=int, default=10, help="Mini-batch size")
    func_parser.add_argument("--normalize", action="store_true", help="Min-max scale inputs to [0, 1]")

    # MNIST
    mnist_parser = subparsers.add_parser(
        "train-mnist", help="Train on MNIST IDX files",
        parents=[common, _training_parser(MNIST_SWAG)], formatter_class=formatter,
    )
    mnist_parser.add_argument("--images", required=True, help="Training images (IDX, optionally gzipped)")
    mnist_parser.add_argument("--labels", required=True, help="Training labels")
    mnist_parser.add_argument("--test-images", required=True, help="Test images")
    mnist_parser.add_argument("--test-labels", required=True, help="Test labels")
    mnist_parser.add_argument("--arch", choices=[SWAG_ARCH, "baseline"], default=SWAG_ARCH, help="Architecture")
    mnist_parser.add_argument("--epochs", type=int, default=4, help="Training epochs")
    mnist_parser.add_argument("--batch-size", type=int, default=100, help="Mini-batch size")
    mnist_parser.add_argument("--loss", choices=[loss.value for loss in Loss], default=Loss.CROSS_ENTROPY.value,
                              help="Training loss")

    # Gradient check
    grad_parser = subparsers.add_parser(
        "gradcheck", help="Compare backprop with finite differences",
        parents=[common], formatter_class=formatter,
    )
    grad_parser.add_argument("--seed", type=int, default=0, help="Seed for weights and data")
    grad_parser.add_argument("--config", action="append", default=[],
                             help="Case such as 'k=4,l=3,depth=4' (repeatable); default is the full matrix")
    grad_parser.add_argument("--step", type=float, default=1e-6, help="Finite-difference step")

    # Compare
    compare_parser = subparsers.add_parser(
        "compare", help="Train SWAG and baselines A-E under one seed",
        parents=[common, _training_parser(FUNCTION_SWAG)], formatter_class=formatter,
    )
    compare_parser.add_argument("--function", required=True, choices=["f1", "f2", "f3"], help="Target function")
    compare_parser.add_argument("--experiment", type=int, choices=[1, 2], default=1,
                                help="1: random inputs, 2: fixed grids")
    compare_parser.add_argument("--epochs", type=int, default=50, help="Training epochs")
    compare_parser.add_argument("--batch-size", type=int, default=10, help="Mini-batch size")
    compare_parser.add_argument("--normalize", action="store_true", help="Min-max scale inputs to [0, 1]")
    compare_parser.add_argument("--jobs", type=int, default=1, help="Architectures trained in parallel")

    # Rerun
    rerun_parser = subparsers.add_parser(
        "rerun", help="Re-execute a run from its manifest", parents=[common], formatter_class=formatter,
    )
    rerun_parser.add_argument("manifest", help="manifest.json of an earlier run")
    rerun_parser.add_argument("--out", required=True, help="Directory for the new artifacts")

    # Version
    subparsers.add_parser("version", help="Show version information")

    return parser.parse_args(args)


def configure_logging(args: argparse.Namespace) -> None:
    verbose = getattr(args, "verbose", False)
    quiet = getattr(args, "quiet", False)
    if quiet:
        level = logging.WARNING
    elif verbose or args.command in TRAINING_COMMANDS:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _fit_options(args: argparse.Namespace, loss: Loss) -> FitOptions:
    return FitOptions(
        epochs=args.epochs,
        batch_size=args.batch_size,
        loss=loss,
        seed=args.seed,
        adam=AdamConfig(lr=args.lr, beta1=args.beta1, beta2=args.beta2, eps=args.eps),
    )


def _shape(args: argparse.Namespace) -> SwagShape:
    return SwagShape(k=args.k, l=args.l, depth=args.depth, hidden_width=args.hidden_width, basis=Basis(args.basis))


def cmd_train_func(args: argparse.Namespace, argv: List[str]) -> int:
    started = utc_now()
    opts = _fit_options(args, Loss.MSE)
    result = run_function(args.arch, args.function, args.experiment, opts, args.out,
                          shape=_shape(args), normalize=args.normalize, profile=args.profile)
    manifest = write_manifest(
        args.out, "train-func", argv, result.model.config, opts, started, result.outputs,
        extra={"function": args.function, "experiment": args.experiment, "arch": args.arch,
               "normalize": args.normalize},
    )
    final = result.report.final
    if final is not None:
        print(f"{args.arch}: final train loss {final.train_loss:.6g}, test loss {final.test_loss:.6g}")
    print(f"Artifacts written to {args.out} (manifest: {manifest})")
    return 0


def cmd_train_mnist(args: argparse.Namespace, argv: List[str]) -> int:
    started = utc_now()
    opts = _fit_options(args, Loss(args.loss))
    paths = {
        "images": args.images,
        "labels": args.labels,
        "test_images": args.test_images,
        "test_labels": args.test_labels,
    }
    result = run_mnist(args.arch, paths, opts, args.out, shape=_shape(args), profile=args.profile)
    manifest = write_manifest(
        args.out, "train-mnist", argv, result.model.config, opts, started, result.outputs,
        extra={"arch": args.arch, "data": paths},
    )
    final = result.report.final
    if final is not None:
        print(f"{result.model.name}: final test loss {final.test_loss:.6g}, test accuracy {final.test_accuracy:.4f}")
    print(f"Artifacts written to {args.out} (manifest: {manifest})")
    return 0


def cmd_gradcheck(args: argparse.Namespace) -> int:
    cases = [parse_case(text) for text in args.config] or list(DEFAULT_CASES)
    failed = 0
    for case in cases:
        try:
            error = check_case(case, args.seed, args.step)
        except NumericError as e:
            print(f"  {case.label:<20} error: {e}")
            failed += 1
            continue
        ok = error < TOLERANCE
        failed += not ok
        print(f"  {case.label:<20} max relative error {error:.3e}  {'ok' if ok else 'FAIL'}")
    print(f"{len(cases) - failed}/{len(cases)} configurations below {TOLERANCE:g}")
    return 0 if failed == 0 else 1


def cmd_compare(args: argparse.Namespace, argv: List[str]) -> int:
    started = utc_now()
    opts = _fit_options(args, Loss.MSE)
    result = run_compare(args.function, args.experiment, opts, args.out, shape=_shape(args),
                         normalize=args.normalize, jobs=args.jobs)
    write_manifest(
        args.out, "compare", argv, None, opts, started, result["outputs"],
        extra={"function": args.function, "experiment": args.experiment, "configs": result["configs"]},
    )
    summary = result["summary"]
    for rank, arch in enumerate(summary["ranking"], start=1):
        print(f"  {rank}. {arch:<12} final train loss {summary['final_train_loss'][arch]:.6g}")
    print(f"Artifacts written to {args.out}")
    return 0


def _replace_out(argv: List[str], out: str) -> List[str]:
    kept: List[str] = []
    skip = False
    for token in argv:
        if skip:
            skip = False
        elif token == "--out":
            skip = True
        elif not token.startswith("--out="):
            kept.append(token)
    return kept + ["--out", out]


def cmd_rerun(args: argparse.Namespace) -> int:
    try:
        manifest = load_json(args.manifest)
    except ValueError as e:
        raise FormatError(f"{args.manifest}: not a JSON manifest ({e})") from e
    argv = manifest.get("argv") if isinstance(manifest, dict) else None
    if not isinstance(argv, list) or not argv or argv[0] in ("rerun", "version"):
        raise FormatError(f"{args.manifest}: manifest has no re-runnable argv")
    if os.path.abspath(args.out) == os.path.abspath(os.path.dirname(args.manifest) or "."):
        raise FormatError("rerun --out must differ from the directory holding the manifest")
    return main(_replace_out([str(token) for token in argv], args.out))


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args)
    try:
        if args.command == "train-func":
            return cmd_train_func(args, argv)
        elif args.command == "train-mnist":
            return cmd_train_mnist(args, argv)
        elif args.command == "gradcheck":
            return cmd_gradcheck(args)
        elif args.command == "compare":
            return cmd_compare(args, argv)
        elif args.command == "rerun":
            return cmd_rerun(args)
        elif args.command == "version":
            from swagnet import __version__
            print(f"swagnet version {__version__}")
            return 0
        else:
            print("Error: no command given (see swagnet -h)", file=sys.stderr)
            return 2
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except NumericError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    except INPUT_ERRORS + (FileNotFoundError, IsADirectoryError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
