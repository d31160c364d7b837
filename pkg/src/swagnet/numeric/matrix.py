"""
Dense matrix kernels.

A ``Matrix`` is a 2-D, C-contiguous float64 numpy array. Batches are stored
column-wise: an input batch of ``n`` samples of width ``d`` is a ``d x n``
matrix, so every layer computes ``W @ x + b`` with ``b`` broadcast over columns.
"""

from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt

from swagnet.errors import DimensionError, NumericError

Matrix = npt.NDArray[np.float64]


def as_matrix(data: Any, *, copy: bool = False) -> Matrix:
    """
    Coerce ``data`` to a float64 matrix.

    1-D input becomes a column vector. Scalars become a 1x1 matrix.

    Raises:
        DimensionError: if ``data`` has more than two dimensions or a zero dimension
        NumericError: if any entry is NaN or infinite
    """
    arr = np.array(data, dtype=np.float64) if copy else np.asarray(data, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    elif arr.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {arr.shape}")
    if 0 in arr.shape:
        raise DimensionError(f"matrix dimensions must be >= 1, got {arr.shape}")
    arr = np.ascontiguousarray(arr)
    check_finite(arr, "matrix")
    return arr


def check_finite(m: np.ndarray, where: str) -> np.ndarray:
    """Raise ``NumericError`` naming ``where`` unless every entry of ``m`` is finite."""
    if not np.all(np.isfinite(m)):
        bad = int(np.size(m) - np.count_nonzero(np.isfinite(m)))
        raise NumericError(f"{where}: {bad} non-finite value(s) in array of shape {np.shape(m)}")
    return m


def shape_str(m: np.ndarray) -> str:
    return "x".join(str(s) for s in np.shape(m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product ``a @ b``; ``a.cols`` must equal ``b.rows``."""
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {shape_str(a)} by {shape_str(b)}")
    return np.matmul(a, b)


def affine(w: Matrix, b: Matrix, x: Matrix) -> Matrix:
    """
    Pre-activation ``W x + b`` with ``b`` broadcast over the batch columns.

    Args:
        w: ``l x d`` weights
        b: ``l x 1`` bias column
        x: ``d x n`` batch

    Returns:
        ``l x n`` matrix whose column j is ``W x_j + b``
    """
    if b.ndim != 2 or b.shape != (w.shape[0], 1):
        raise DimensionError(f"bias of shape {shape_str(b)} does not match weights {shape_str(w)}")
    return matmul(w, x) + b
