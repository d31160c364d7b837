"""Tests for the scaled-monomial basis."""

import math

import numpy as np
import pytest

from swagnet.activations.base import Basis
from swagnet.activations.monomial import FACTORIALS, monomial_backward, monomial_forward
from swagnet.errors import ConfigError, NumericError


class TestFactorials:
    def test_table_is_exact(self):
        assert len(FACTORIALS) == 21
        for i, value in enumerate(FACTORIALS):
            assert int(value) == math.factorial(i)


class TestMonomialForward:
    def test_half_squared(self):
        z = np.array([[0.5]])
        assert monomial_forward(z, 1)[0, 0] == 0.5
        assert monomial_forward(z, 2)[0, 0] == 0.125

    def test_cubic_at_two(self):
        assert monomial_forward(np.array([[2.0]]), 3)[0, 0] == pytest.approx(8.0 / 6.0, rel=1e-15)

    def test_zero_maps_to_zero(self):
        z = np.zeros((3, 4))
        for p in range(1, 21):
            np.testing.assert_array_equal(monomial_forward(z, p), z)

    def test_plain_basis(self):
        assert monomial_forward(np.array([[3.0]]), 4, Basis.PLAIN)[0, 0] == 81.0

    @pytest.mark.parametrize("p", [1, 2, 5, 8, 13])
    def test_scaling_law(self, p):
        rng = np.random.default_rng(p)
        z = rng.uniform(-1.0, 1.0, size=(4, 6))
        c = rng.uniform(-2.0, 2.0)
        np.testing.assert_allclose(monomial_forward(c * z, p), c**p * monomial_forward(z, p), rtol=1e-12)

    @pytest.mark.parametrize("p", [0, 21, -1])
    def test_degree_out_of_range(self, p):
        with pytest.raises(ConfigError):
            monomial_forward(np.ones((1, 1)), p)

    def test_overflow_names_layer_and_degree(self):
        with pytest.raises(NumericError, match=r"layer block_0, monomial p=20"):
            monomial_forward(np.array([[1e200]]), 20, layer="block_0")


class TestMonomialBackward:
    def test_first_degree_is_ones(self):
        z = np.array([[-3.0, 0.0, 7.5]])
        np.testing.assert_array_equal(monomial_backward(z, 1), np.ones_like(z))

    def test_ladder_is_bitwise(self):
        z = np.random.default_rng(0).normal(size=(5, 7))
        for p in range(2, 21):
            np.testing.assert_array_equal(monomial_backward(z, p), monomial_forward(z, p - 1))

    def test_plain_basis_derivative(self):
        z = np.array([[2.0]])
        assert monomial_backward(z, 3, Basis.PLAIN)[0, 0] == 12.0

    def test_matches_finite_difference(self):
        z = np.linspace(-1.5, 1.5, 11).reshape(1, -1)
        h = 1e-6
        for p in (2, 5, 8):
            numeric = (monomial_forward(z + h, p) - monomial_forward(z - h, p)) / (2 * h)
            np.testing.assert_allclose(monomial_backward(z, p), numeric, rtol=1e-6, atol=1e-9)
