"""Tests for JSON checkpoints."""

import json

import numpy as np
import pytest

from swagnet.errors import FormatError
from swagnet.network.baselines import build_baseline
from swagnet.network.builder import build_swag
from swagnet.network.checkpoint import load_checkpoint, save_checkpoint
from swagnet.network.config import swag_config
from swagnet.numeric.rng import Rng


@pytest.fixture
def swag_model():
    return build_swag(swag_config(2, 1, k=3, l=4, depth=4, hidden_width=5, name="ckpt"), Rng(11))


class TestCheckpoint:
    def test_round_trip_is_bitwise(self, tmp_path, swag_model):
        path = save_checkpoint(swag_model, str(tmp_path / "checkpoint.json"))
        loaded = load_checkpoint(path)
        assert loaded.config == swag_model.config
        original = swag_model.named_parameters()
        restored = loaded.named_parameters()
        assert list(original) == list(restored)
        for key in original:
            np.testing.assert_array_equal(restored[key], original[key])

    def test_loaded_model_predicts_identically(self, tmp_path, swag_model):
        path = save_checkpoint(swag_model, str(tmp_path / "c.json"))
        x = np.linspace(0.0, 1.0, 12).reshape(2, 6)
        np.testing.assert_array_equal(load_checkpoint(path).predict(x), swag_model.predict(x))

    def test_baseline_with_dropout(self, tmp_path):
        model = build_baseline("B", Rng(0))
        loaded = load_checkpoint(save_checkpoint(model, str(tmp_path / "b.json")))
        assert loaded.parameter_count() == 2272

    def test_document_layout(self, tmp_path, swag_model):
        path = save_checkpoint(swag_model, str(tmp_path / "c.json"))
        with open(path) as f:
            doc = json.load(f)
        assert doc["format_version"] == 1
        assert doc["config"]["name"] == "ckpt"
        assert len(doc["parameters"]) == 4
        assert set(doc["parameters"][0]) == {"W1", "b1", "W2", "b2", "W3", "b3"}

    def test_wrong_version(self, tmp_path, swag_model):
        path = tmp_path / "c.json"
        save_checkpoint(swag_model, str(path))
        doc = json.loads(path.read_text())
        doc["format_version"] = 2
        path.write_text(json.dumps(doc))
        with pytest.raises(FormatError):
            load_checkpoint(str(path))

    def test_missing_parameters(self, tmp_path, swag_model):
        path = tmp_path / "c.json"
        save_checkpoint(swag_model, str(path))
        doc = json.loads(path.read_text())
        doc["parameters"][0].pop("W2")
        path.write_text(json.dumps(doc))
        with pytest.raises(FormatError):
            load_checkpoint(str(path))

    def test_transposed_weight_rejected(self, tmp_path, swag_model):
        path = tmp_path / "c.json"
        save_checkpoint(swag_model, str(path))
        doc = json.loads(path.read_text())
        doc["parameters"][1]["W"] = np.array(doc["parameters"][1]["W"]).T.tolist()
        path.write_text(json.dumps(doc))
        with pytest.raises(FormatError, match=r"dense_1.W has shape \(12, 5\)"):
            load_checkpoint(str(path))

    def test_renamed_key_rejected(self, tmp_path, swag_model):
        path = tmp_path / "c.json"
        save_checkpoint(swag_model, str(path))
        doc = json.loads(path.read_text())
        doc["parameters"][0]["W9"] = doc["parameters"][0].pop("W3")
        path.write_text(json.dumps(doc))
        with pytest.raises(FormatError, match="block_0"):
            load_checkpoint(str(path))

    def test_ragged_rows_rejected(self, tmp_path, swag_model):
        path = tmp_path / "c.json"
        save_checkpoint(swag_model, str(path))
        doc = json.loads(path.read_text())
        doc["parameters"][3]["b"] = [[0.0, 1.0], [2.0]]
        path.write_text(json.dumps(doc))
        with pytest.raises(FormatError, match="dense_3.b"):
            load_checkpoint(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_checkpoint(str(tmp_path / "nope.json"))
