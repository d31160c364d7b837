"""Tests for model building, the exact-polynomial witness and baselines."""

import numpy as np
import pytest

from swagnet.activations.base import RELU, SOFTMAX, SOFTPLUS, ActivationKind, Basis
from swagnet.errors import ConfigError, DimensionError, StateError
from swagnet.network.baselines import EXPECTED_PARAMS, baseline_config, build_baseline
from swagnet.network.builder import Init, build_model, build_swag, exact_polynomial_weights, parameter_shapes
from swagnet.network.config import AffineSpec, ModelConfig, swag_config
from swagnet.network.layers import Dense, Dropout, MonomialBlock
from swagnet.numeric.rng import Rng


class TestBuildSwag:
    def test_parameter_count_matches_closed_form(self):
        config = swag_config(1, 1, k=8, l=50, depth=4, hidden_width=50)
        model = build_swag(config, Rng(0))
        assert model.parameter_count() == 41_651

    def test_same_seed_same_weights(self):
        config = swag_config(2, 1, k=3, l=4, depth=4, hidden_width=5)
        a = build_swag(config, Rng(9)).named_parameters()
        b = build_swag(config, Rng(9)).named_parameters()
        assert list(a) == list(b)
        for key in a:
            np.testing.assert_array_equal(a[key], b[key])

    def test_draw_order_layer_major_p_ascending(self):
        config = swag_config(2, 1, k=2, l=3, depth=2)
        model = build_swag(config, Rng(4))
        rng = Rng(4)
        np.testing.assert_array_equal(model.layers[0].params["W1"], rng.standard_normal(3, 2))
        np.testing.assert_array_equal(model.layers[0].params["W2"], rng.standard_normal(3, 2))
        np.testing.assert_array_equal(model.layers[1].params["W"], rng.glorot_uniform(1, 6))

    def test_linear_layers_are_glorot_bounded(self):
        config = swag_config(1, 1, k=8, l=50, depth=4, hidden_width=50)
        model = build_swag(config, Rng(0))
        hidden = model.layers[1].params["W"]
        assert hidden.shape == (50, 400)
        assert np.abs(hidden).max() <= np.sqrt(6.0 / 450)
        assert np.abs(model.layers[3].params["W"]).max() <= np.sqrt(6.0 / 401)
        assert np.abs(model.layers[0].params["W1"]).max() > 1.0

    def test_default_function_net_starts_small(self):
        config = swag_config(1, 1, k=8, l=50, depth=4, hidden_width=50)
        x = np.linspace(1e-6, 1.0, 200).reshape(1, -1)
        for seed in (0, 1, 7):
            out = build_swag(config, Rng(seed).split(1)).predict(x)
            assert np.abs(out).max() < 1e4

    def test_biases_start_at_zero(self):
        model = build_swag(swag_config(1, 1, k=3, l=2, depth=4, hidden_width=3), Rng(0))
        for name, value in model.named_parameters().items():
            if ".b" in name:
                assert not value.any()

    def test_parameter_shapes_match_built_layers(self):
        config = swag_config(2, 3, k=3, l=4, depth=4, hidden_width=5)
        model = build_swag(config, Rng(0))
        for layer, shapes in zip(model.layers, parameter_shapes(config)):
            assert list(layer.params) == list(shapes)
            assert all(layer.params[key].shape == shape for key, shape in shapes.items())

    def test_rejects_non_swag_config(self):
        config = ModelConfig(1, (AffineSpec(3, RELU), AffineSpec(1)))
        with pytest.raises(ConfigError):
            build_swag(config, Rng(0))

    def test_layer_names(self):
        model = build_swag(swag_config(1, 1, k=1, l=1, depth=2), Rng(0))
        assert [layer.name for layer in model.layers] == ["block_0", "dense_1"]


class TestExactPolynomial:
    def test_identity(self):
        model = exact_polynomial_weights([0.0, 1.0])
        assert model.forward(np.array([[0.3]]))[0, 0] == pytest.approx(0.3, abs=1e-15)

    def test_quadratic(self):
        model = exact_polynomial_weights([1.0, 0.0, 2.0])
        assert model.forward(np.array([[0.5]]))[0, 0] == pytest.approx(1.5, abs=1e-15)

    def test_zero_polynomial(self):
        model = exact_polynomial_weights([0.0, 0.0, 0.0, 0.0])
        x = np.random.default_rng(0).uniform(size=(1, 100))
        np.testing.assert_array_equal(model.forward(x), np.zeros((1, 100)))

    @pytest.mark.parametrize("basis", [Basis.FACTORIAL, Basis.PLAIN])
    def test_random_coefficients(self, basis):
        gen = np.random.default_rng(2024)
        x = np.linspace(0.0, 1.0, 1000).reshape(1, -1)
        for _ in range(50):
            k = int(gen.integers(1, 9))
            coeffs = gen.uniform(-1.0, 1.0, k + 1)
            model = exact_polynomial_weights(coeffs, basis)
            expected = np.polynomial.polynomial.polyval(x, coeffs)
            np.testing.assert_allclose(model.forward(x), expected, rtol=0, atol=1e-10)

    def test_is_a_valid_swag_model(self):
        model = exact_polynomial_weights([1.0, 2.0, 3.0])
        assert model.config.is_swag
        assert model.parameter_count() == model.config.parameter_count()

    def test_needs_coefficients(self):
        with pytest.raises(ConfigError):
            exact_polynomial_weights([])


class TestBaselines:
    @pytest.mark.parametrize("name", ["A", "B", "C", "D", "E"])
    def test_parameter_counts(self, name):
        assert build_baseline(name, Rng(0)).parameter_count() == EXPECTED_PARAMS[name]

    def test_known_totals(self):
        assert [EXPECTED_PARAMS[n] for n in "ABCDE"] == [2476, 2272, 2747, 1131, 2076]

    def test_mnist_baseline_widths(self):
        config = baseline_config("mnist-baseline")
        assert config.widths == (784, 1024, 1024, 10)
        assert config.output_activation == SOFTMAX
        assert config.parameter_count() == 1_863_690

    def test_name_aliases(self):
        assert baseline_config("baseline-c").name == "baseline-c"
        assert baseline_config("c").parameter_count() == 2747
        assert baseline_config("mnist").name == "mnist-baseline"

    def test_unknown_name(self):
        with pytest.raises(ConfigError):
            build_baseline("F", Rng(0))

    def test_e_uses_softplus(self):
        config = baseline_config("E")
        kinds = [spec.activation.kind for spec in config.layers if isinstance(spec, AffineSpec)]
        assert kinds[0] == ActivationKind.SOFTPLUS
        assert kinds[-1] == ActivationKind.SOFTPLUS

    def test_dropout_after_output_kept(self):
        model = build_baseline("D", Rng(0))
        assert isinstance(model.layers[-1], Dropout)
        assert isinstance(model.layers[-2], Dense)

    def test_glorot_init(self):
        model = build_baseline("A", Rng(0))
        w = model.layers[0].params["W"]
        assert np.max(np.abs(w)) <= np.sqrt(6.0 / 11.0)

    def test_dropout_is_identity_at_inference(self):
        model = build_baseline("B", Rng(1))
        x = np.linspace(0.01, 1.0, 20).reshape(1, -1)
        np.testing.assert_array_equal(model.forward(x), model.forward(x))


class TestModel:
    def test_input_width_checked(self):
        model = build_swag(swag_config(2, 1, k=1, l=1), Rng(0))
        with pytest.raises(DimensionError):
            model.forward(np.ones((3, 4)))

    def test_backward_without_forward(self):
        model = build_swag(swag_config(1, 1, k=2, l=2), Rng(0))
        with pytest.raises(StateError):
            model.backward(np.ones((1, 1)))

    def test_named_parameters_are_live(self):
        model = build_swag(swag_config(1, 1, k=1, l=1), Rng(0))
        params = model.named_parameters()
        params["dense_1.b"] += 1.0
        assert model.layers[1].params["b"][0, 0] == 1.0

    def test_predict_chunks_match_full_batch(self):
        model = build_swag(swag_config(1, 1, k=3, l=4, depth=4, hidden_width=5), Rng(2))
        x = np.linspace(0.0, 1.0, 37).reshape(1, -1)
        full = model.forward(x)
        model.clear_cache()
        np.testing.assert_allclose(model.predict(x, batch_size=10), full, rtol=1e-13, atol=1e-13)

    def test_glorot_model_build(self):
        config = ModelConfig(3, (AffineSpec(4, SOFTPLUS), AffineSpec(2)))
        model = build_model(config, Rng(0), Init.GLOROT_UNIFORM)
        assert isinstance(model.layers[0], Dense)
        assert not isinstance(model.layers[0], MonomialBlock)
        assert model.parameter_count() == 3 * 4 + 4 + 4 * 2 + 2
