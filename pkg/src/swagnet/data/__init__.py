"""Target functions, experiment datasets and MNIST ingestion."""

from swagnet.data.dataset import (
    NUM_CLASSES,
    Dataset,
    DatasetMeta,
    Protocol,
    experiment2_grids,
    make_experiment,
    make_experiment1,
    make_experiment2,
    normalize_inputs,
    normalize_unit,
    one_hot,
    one_hot_matrix,
)
from swagnet.data.idx import IMAGE_MAGIC, LABEL_MAGIC, IdxHeader, load_mnist, read_idx, write_idx
from swagnet.data.targets import TargetFunction, eval_target

__all__ = [
    "Dataset",
    "DatasetMeta",
    "IMAGE_MAGIC",
    "IdxHeader",
    "LABEL_MAGIC",
    "NUM_CLASSES",
    "Protocol",
    "TargetFunction",
    "eval_target",
    "experiment2_grids",
    "load_mnist",
    "make_experiment",
    "make_experiment1",
    "make_experiment2",
    "normalize_inputs",
    "normalize_unit",
    "one_hot",
    "one_hot_matrix",
    "read_idx",
    "write_idx",
]
