"""
swagnet - feedforward networks whose activations form a scaled-monomial basis.

This package provides:
- SWAG networks built from blocks of x^p/p! activations
- the comparison baselines and their training loop (backprop, Adam, MSE / cross-entropy)
- the synthetic function suite and MNIST ingestion
- a command-line runner that writes CSV and JSON artifacts
"""

__version__ = "0.1.0"

from swagnet.data import Dataset, load_mnist, make_experiment1, make_experiment2
from swagnet.errors import SwagError
from swagnet.network import Model, ModelConfig, build_baseline, build_swag, swag_config
from swagnet.numeric import Rng
from swagnet.training import AdamConfig, FitOptions, Loss, fit, grad_check

__all__ = [
    'AdamConfig',
    'Dataset',
    'FitOptions',
    'Loss',
    'Model',
    'ModelConfig',
    'Rng',
    'SwagError',
    'build_baseline',
    'build_swag',
    'fit',
    'grad_check',
    'load_mnist',
    'make_experiment1',
    'make_experiment2',
    'swag_config',
]
