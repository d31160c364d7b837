"""Tests for the gradient checker itself."""

import numpy as np
import pytest

import swagnet.network.layers as layers
import swagnet.training.gradcheck as gradcheck
from swagnet.errors import ConfigError
from swagnet.training.gradcheck import (
    DEFAULT_CASES,
    TOLERANCE,
    GradCheckCase,
    check_case,
    parse_case,
    relative_error,
)


class TestParseCase:
    def test_full(self):
        assert parse_case("k=4,l=3,depth=4") == GradCheckCase(k=4, l=3, depth=4)

    def test_depth_defaults_to_two(self):
        assert parse_case(" k=2 , l=1 ").depth == 2

    def test_extra_fields(self):
        case = parse_case("k=2,l=1,batch=7,input_dim=3")
        assert (case.batch, case.input_dim) == (7, 3)

    @pytest.mark.parametrize("text", ["k=2", "k=2,l=x", "k=2,l=1,width=3", "k2,l1", ""])
    def test_rejects(self, text):
        with pytest.raises(ConfigError):
            parse_case(text)

    def test_label(self):
        assert GradCheckCase(k=8, l=5, depth=4).label == "k=8,l=5,depth=4"


class TestRelativeError:
    def test_identical(self):
        a = np.array([[1.0, -2.0]])
        assert relative_error(a, a.copy()) == 0.0

    def test_scale(self):
        assert relative_error(np.array([1.0]), np.array([0.5])) == pytest.approx(0.5 / 1.5)

    def test_is_entrywise(self):
        analytic = np.array([[10.0, 1e-3]])
        numeric = np.array([[10.0, -1e-3]])
        assert relative_error(analytic, numeric) == pytest.approx(1.0)

    def test_empty(self):
        assert relative_error(np.zeros((0, 3)), np.zeros((0, 3))) == 0.0

    def test_floor_for_tiny_gradients(self):
        assert relative_error(np.array([1e-12]), np.array([0.0])) == pytest.approx(1e-4)


class TestCheckCase:
    def test_default_grid_size(self):
        assert len(DEFAULT_CASES) == 12
        assert {c.label for c in DEFAULT_CASES} >= {"k=1,l=1,depth=2", "k=8,l=5,depth=4"}

    def test_deterministic(self):
        case = GradCheckCase(k=3, l=2, depth=2)
        assert check_case(case, seed=4) == check_case(case, seed=4)

    def test_wrong_derivative_is_caught(self, monkeypatch):
        case = GradCheckCase(k=3, l=2, depth=2)
        assert check_case(case, seed=0) < TOLERANCE
        original = layers.monomial_backward

        def flipped(z, p, basis, layer=""):
            return -original(z, p, basis, layer)

        monkeypatch.setattr(layers, "monomial_backward", flipped)
        assert check_case(case, seed=0) > 0.1

    def test_one_small_wrong_entry_is_caught(self, monkeypatch):
        case = GradCheckCase(k=8, l=5, depth=4)
        original = gradcheck.loss_and_gradients

        def corrupted(model, loss, x, target):
            value, grads = original(model, loss, x, target)
            name, idx = min(
                ((key, i) for key in grads for i in np.ndindex(grads[key].shape) if abs(grads[key][i]) > 1e-7),
                key=lambda item: abs(grads[item[0]][item[1]]),
            )
            grads[name][idx] *= -3.0
            return value, grads

        monkeypatch.setattr(gradcheck, "loss_and_gradients", corrupted)
        assert check_case(case, seed=0) > 0.5
