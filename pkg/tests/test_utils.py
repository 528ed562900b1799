import math

import numpy as np
import pytest

from fractconvex.utils import (
    safe_eval,
    node_grid,
    chord_pairs,
    lambda_grid,
    alpha_range,
    violates,
    json_number,
    render_json,
    render_csv,
    format_cell
)
from fractconvex.exc import FracConfigExc, FracDomainError


def test_safe_eval_skips_failing_points():
    def fn(x):
        if np.any(np.asarray(x) < 0):
            raise FracDomainError("negative", "x")
        return np.sqrt(x)

    values = safe_eval(fn, np.array([-1.0, 0.0, 4.0]))

    assert math.isnan(values[0])
    assert values[1:].tolist() == [0.0, 2.0]


def test_safe_eval_broadcasts_constants():
    assert safe_eval(lambda x: 3.0, np.zeros(4)).tolist() == [3.0] * 4


def test_grids():
    assert node_grid(0.0, 1.0, 5).tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert lambda_grid(3).tolist() == [0.0, 0.5, 1.0]


@pytest.mark.parametrize("n_pairs, expected", [(1, 1), (3, 3), (4, 4), (10, 10), (200, 200)])
def test_chord_pairs(n_pairs, expected):
    pairs = chord_pairs(0.0, 1.0, n_pairs)

    assert len(pairs) == expected
    assert all(x1 < x2 for x1, x2 in pairs)
    assert pairs == sorted(pairs)
    assert pairs[0] == (0.0, pairs[0][1])
    assert pairs == chord_pairs(0.0, 1.0, n_pairs)


def test_violates_uses_a_scaled_tolerance():
    assert violates(1.0 + 1e-6, 1.0, 1e-9)
    assert not violates(1.0 + 1e-10, 1.0, 1e-9)
    assert not violates(1e6 + 1e-4, 1e6, 1e-9)
    assert violates(1e6 + 1e-2, 1e6, 1e-9)
    assert violates(np.array([2.0, 0.0]), np.array([1.0, 1.0]), 1e-9).tolist() == [True, False]


@pytest.mark.parametrize("text, expected", [
    ("0.5", [0.5]),
    ("0.1:0.3:0.1", [0.1, 0.2, 0.3]),
    ("0.25:1:0.25", [0.25, 0.5, 0.75, 1.0]),
    ("0.2:0.5:0.2", [0.2, 0.4]),
])
def test_alpha_range(text, expected):
    assert alpha_range(text) == pytest.approx(expected)


def test_alpha_range_keeps_the_stop_value():
    assert alpha_range("0.1:0.3:0.1")[-1] == 0.3


@pytest.mark.parametrize("text", ["a:b:c", "0.1:0.5", "0.5:0.1:0.1", "0.1:0.5:0", "0.1:0.5:-0.1"])
def test_bad_alpha_range(text):
    with pytest.raises(FracConfigExc):
        alpha_range(text)


def test_json_number():
    assert json_number(1.5) == 1.5
    assert json_number(float("nan")) is None
    assert json_number(float("inf")) is None
    assert json_number(None) is None


def test_render_json():
    text = render_json({"b": 1.0, "a": [None, True]})

    assert text.endswith("}\n")
    assert text.index('"b"') < text.index('"a"')

    with pytest.raises(ValueError):
        render_json({"x": float("nan")})


@pytest.mark.parametrize("value, text", [
    (0.1, "0.10000000000000001"),
    (1.0, "1"),
    (True, "true"),
    (False, "false"),
    (None, ""),
    ("real", "real"),
])
def test_format_cell(value, text):
    assert format_cell(value) == text


def test_render_csv():
    text = render_csv(["alpha", "satisfied"], [(0.5, True), (1.0, None)])

    assert text == "alpha,satisfied\r\n0.5,true\r\n1,\r\n"
