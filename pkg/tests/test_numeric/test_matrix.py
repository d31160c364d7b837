"""Tests for the dense matrix helpers."""

import numpy as np
import pytest

from swagnet.errors import DimensionError, NumericError
from swagnet.numeric.matrix import affine, as_matrix, check_finite, matmul, shape_str


class TestAsMatrix:
    def test_vector_becomes_column(self):
        m = as_matrix([1.0, 2.0, 3.0])
        assert m.shape == (3, 1)
        assert m.dtype == np.float64

    def test_scalar_becomes_1x1(self):
        assert as_matrix(2.5).shape == (1, 1)

    def test_nested_lists(self):
        m = as_matrix([[1, 2], [3, 4]])
        assert m.flags.c_contiguous
        assert m[1, 0] == 3.0

    def test_copy_detaches(self):
        src = np.ones((2, 2))
        m = as_matrix(src, copy=True)
        m[0, 0] = 5.0
        assert src[0, 0] == 1.0

    def test_rejects_three_dims(self):
        with pytest.raises(DimensionError):
            as_matrix(np.zeros((2, 2, 2)))

    def test_rejects_empty(self):
        with pytest.raises(DimensionError):
            as_matrix(np.zeros((0, 3)))

    def test_rejects_nan(self):
        with pytest.raises(NumericError):
            as_matrix([[1.0, float("nan")]])


class TestCheckFinite:
    def test_passes_through(self):
        m = np.ones((2, 3))
        assert check_finite(m, "x") is m

    def test_names_location_and_count(self):
        m = np.array([[np.inf, 1.0, -np.inf]])
        with pytest.raises(NumericError, match="layer block_0: 2 non-finite"):
            check_finite(m, "layer block_0")


class TestMatmul:
    def test_product(self):
        a = np.array([[1.0, 2.0]])
        b = np.array([[3.0], [4.0]])
        assert matmul(a, b)[0, 0] == 11.0

    def test_two_by_two_example(self):
        product = matmul(np.array([[1.0, 2.0], [3.0, 4.0]]), np.array([[5.0, 6.0], [7.0, 8.0]]))
        np.testing.assert_array_equal(product, [[19.0, 22.0], [43.0, 50.0]])

    def test_associative(self):
        rng = np.random.default_rng(11)
        a, b, c = (rng.uniform(-1.0, 1.0, size=(3, 3)) for _ in range(3))
        np.testing.assert_allclose(matmul(matmul(a, b), c), matmul(a, matmul(b, c)), rtol=0, atol=1e-10)

    def test_mismatch_names_both_shapes(self):
        with pytest.raises(DimensionError, match="cannot multiply 2x3 by 2x3"):
            matmul(np.zeros((2, 3)), np.zeros((2, 3)))

    def test_shape_str(self):
        assert shape_str(np.zeros((4, 7))) == "4x7"


class TestAffine:
    def test_bias_broadcasts_over_columns(self):
        w = np.array([[2.0]])
        b = np.array([[1.0]])
        x = np.array([[0.0, 1.0, 2.0]])
        np.testing.assert_array_equal(affine(w, b, x), [[1.0, 3.0, 5.0]])

    def test_bias_shape_checked(self):
        with pytest.raises(DimensionError):
            affine(np.ones((2, 1)), np.ones((1, 1)), np.ones((1, 3)))
