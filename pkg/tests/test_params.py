import json

import pytest

from fractconvex import FracRunConfig, FPModes, FPFormats
from fractconvex.exc import FracConfigExc


def test_defaults():
    run = FracRunConfig.from_sources({})

    assert run.alpha == 1.0
    assert run.mode == FPModes.real
    assert run.fmt == FPFormats.json
    assert run.tol == 1e-9
    assert (run.n_pairs, run.n_lambda, run.n_points, run.n_support) == (50, 41, 201, 41)


def test_precedence(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"alpha": 0.5, "mode": "fractal", "n-pairs": 10}), encoding="UTF-8")

    run = FracRunConfig.from_sources({"alpha": 0.75, "ignored": 1}, config)

    assert run.alpha == 0.75
    assert run.mode == FPModes.fractal
    assert run.n_pairs == 10


def test_command_defaults(tmp_path):
    run = FracRunConfig.from_sources({}, None, {"mode": "fractal", "unknown": 1})

    assert run.mode == FPModes.fractal

    config = tmp_path / "config.json"
    config.write_text(json.dumps({"mode": "real"}), encoding="UTF-8")

    assert FracRunConfig.from_sources({}, config, {"mode": "fractal"}).mode == FPModes.real
    assert FracRunConfig.from_sources({"mode": "fractal"}, config, {"mode": "real"}).mode == FPModes.fractal


def test_format_key(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"format": "csv", "config": "other.json"}), encoding="UTF-8")

    assert FracRunConfig.load_file(config) == {"fmt": "csv"}


@pytest.mark.parametrize("content", ['{"colour": 1}', "[1, 2]", "{not json"])
def test_bad_config_file(tmp_path, content):
    config = tmp_path / "config.json"
    config.write_text(content, encoding="UTF-8")

    with pytest.raises(FracConfigExc):
        FracRunConfig.load_file(config)


def test_missing_config_file(tmp_path):
    with pytest.raises(FracConfigExc):
        FracRunConfig.load_file(tmp_path / "missing.json")


@pytest.mark.parametrize("kwargs", [{"mode": "complex"}, {"fmt": "xml"}])
def test_bad_values(kwargs):
    with pytest.raises(FracConfigExc):
        FracRunConfig(**kwargs)
