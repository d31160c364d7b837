#!/usr/bin/env python3
"""Time one training step of the SWAG networks and baselines.

Each case builds its model once, then times forward, backward and a full
forward/backward/Adam step on a single mini-batch with timeit.
"""

import argparse
import sys
import timeit
from pathlib import Path

# Ensure the src is importable
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from swagnet.data.dataset import one_hot_matrix
from swagnet.experiments import function_model, mnist_model
from swagnet.numeric.rng import Rng
from swagnet.training.adam import AdamState, adam_step
from swagnet.training.losses import Loss
from swagnet.training.trainer import loss_and_gradients

CASES = [
    # name, builder, arch, input rows, output rows, batch, loss, iterations
    ("swag f(x)", function_model, "swag", 1, 1, 10, Loss.MSE, 500),
    ("baseline-e f(x)", function_model, "baseline-e", 1, 1, 10, Loss.MSE, 500),
    ("swag mnist", mnist_model, "swag", 784, 10, 100, Loss.CROSS_ENTROPY, 20),
    ("baseline mnist", mnist_model, "baseline", 784, 10, 100, Loss.CROSS_ENTROPY, 20),
]


def batch(rows: int, outputs: int, n: int, loss: Loss, rng: Rng):
    x = rng.uniform(0.0, 1.0, rows * n).reshape(rows, n)
    if loss is Loss.CROSS_ENTROPY:
        target = one_hot_matrix(rng.permutation(n) % outputs, outputs)
    else:
        target = rng.standard_normal(outputs, n)
    return x, target


def benchmark_one(name, builder, arch, rows, outputs, n, loss, iterations) -> dict:
    """Time forward, backward and a full Adam step; returns milliseconds per call."""
    model = builder(arch, seed=0)
    x, target = batch(rows, outputs, n, loss, Rng(1))
    params = model.named_parameters()
    state = AdamState.fresh()

    def forward():
        model.forward(x)
        model.clear_cache()

    def step():
        _, grads = loss_and_gradients(model, loss, x, target)
        adam_step(params, grads.grads, state)

    forward()
    step()
    fwd = timeit.timeit(forward, number=iterations)
    full = timeit.timeit(step, number=iterations)
    return {
        "name": name,
        "params": model.parameter_count(),
        "forward_ms": fwd / iterations * 1000,
        "backward_ms": max(full - fwd, 0.0) / iterations * 1000,
        "step_ms": full / iterations * 1000,
    }


def format_time(ms: float) -> str:
    """Format time in appropriate units."""
    if ms >= 1000:
        return f"{ms/1000:.2f}s"
    elif ms >= 1:
        return f"{ms:.2f}ms"
    return f"{ms*1000:.2f}µs"


def main() -> int:
    parser = argparse.ArgumentParser(description="Time SWAG and baseline training steps")
    parser.add_argument("--skip-mnist", action="store_true", help="Only time the function-approximation models")
    args = parser.parse_args()

    print(f"{'Model':<18}{'Params':>10}{'Forward':>12}{'Backward':>12}{'Step':>12}")
    print("─" * 64)
    for case in CASES:
        if args.skip_mnist and case[1] is mnist_model:
            continue
        r = benchmark_one(*case)
        print(f"{r['name']:<18}{r['params']:>10}{format_time(r['forward_ms']):>12}"
              f"{format_time(r['backward_ms']):>12}{format_time(r['step_ms']):>12}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
