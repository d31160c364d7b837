"""Dense matrix kernels and seeded random number generation."""

from swagnet.numeric.matrix import Matrix, affine, as_matrix, check_finite, matmul
from swagnet.numeric.rng import Rng, gaussian_matrix

__all__ = [
    "Matrix",
    "Rng",
    "affine",
    "as_matrix",
    "check_finite",
    "gaussian_matrix",
    "matmul",
]
