import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fractconvex import run_example, complete_example_5_5, default_inputs, mittag_leffler
from fractconvex.exc import FracPreconditionError

from .conftest import ALPHAS


@pytest.mark.parametrize("example", ["5.1", "5.2", "5.3", "5.4", "5.5"])
@pytest.mark.parametrize("alpha", ALPHAS)
def test_default_inputs_satisfy_the_scenarios(example, alpha):
    report = run_example(example, alpha)

    assert report.check == f"example.{example}"
    assert report.satisfied


def test_sum_bound_is_tight_at_alpha_one():
    report = run_example("5.1", 1.0)

    assert report.lhs == pytest.approx(2.0)
    assert report.rhs == 2.0


@given(
    st.floats(min_value=0.1, max_value=1.0),
    st.floats(min_value=0.05, max_value=0.95),
    st.floats(min_value=0.1, max_value=1.0)
)
def test_sum_bound_on_feasible_inputs(alpha, w, t):
    scale = t * 2.0 ** alpha
    a = (w * scale) ** (1.0 / (3.0 * alpha))
    b = ((1.0 - w) * scale) ** (1.0 / (3.0 * alpha))

    report = run_example("5.1", alpha, {"a": a, "b": b})

    assert report.satisfied
    assert report.lhs == pytest.approx(a + b)


def test_sum_bound_rejects_infeasible_inputs():
    with pytest.raises(FracPreconditionError):
        run_example("5.1", 0.5, {"a": 2.0, "b": 2.0})

    with pytest.raises(FracPreconditionError):
        run_example("5.1", 0.5, {"a": 1.0})

    with pytest.raises(FracPreconditionError):
        run_example("5.1", 0.5, {"a": -1.0, "b": 0.5})


def test_mittag_leffler_midpoint_at_alpha_one():
    report = run_example("5.2", 1.0, {"x": 1.0, "y": 2.0})

    assert report.lhs == pytest.approx(math.exp(1.5))
    assert report.rhs == pytest.approx((math.e + math.e ** 2) / 2.0)


def test_mittag_leffler_midpoint():
    alpha = 0.5
    report = run_example("5.2", alpha, {"x": 0.5, "y": 3.0})

    assert report.lhs == pytest.approx(mittag_leffler(alpha, 1.75))
    assert report.satisfied


def test_power_mean_scenario():
    report = run_example("5.3", 0.5)

    assert report.mode == "fractal"
    assert report.lhs == pytest.approx(1.224745, abs=1e-6)
    assert report.rhs == pytest.approx(1.257433, abs=1e-6)

    literal = run_example("5.3", 0.5, {"data": [1.0, 2.0], "s": 1.0, "t": 2.0, "mode": "real"})

    assert not literal.satisfied


def test_jensen_bound_is_attained_at_alpha_one():
    report = run_example("5.4", 1.0)

    assert report.rhs == pytest.approx(report.lhs, rel=1e-12)
    assert report.grid["gap"] == pytest.approx(0.0, abs=1e-6)


def test_jensen_bound_below_alpha_one():
    report = run_example("5.4", 0.5)

    assert report.lhs == pytest.approx(1e5 / 3.0 ** 4.5)
    assert report.rhs == pytest.approx(3.0 * (10.0 / 3.0) ** 5)
    assert report.grid["gap"] > 0.0
    assert report.satisfied


def test_jensen_bound_off_the_simplex():
    with pytest.raises(FracPreconditionError):
        run_example("5.4", 0.5, {"a": 0.5, "b": 0.5, "c": 0.5})

    report = run_example("5.4", 0.5, {"a": 0.2, "b": 0.3, "c": 0.5})

    assert report.satisfied


def test_constrained_ratio_defaults():
    inputs = default_inputs("5.5", 0.5)
    report = run_example("5.5", 0.5, inputs)

    assert inputs["c"] == pytest.approx(4.0)
    assert report.lhs == 1.0
    assert report.rhs == pytest.approx(1.0)


def test_complete_constrained_ratio():
    d = complete_example_5_5(1.0, 2.0, 1.0, 1.0)

    assert d == pytest.approx(math.sqrt(124.0))

    report = run_example("5.5", 1.0, {"a": 1.0, "b": 2.0, "c": 1.0, "d": d})

    assert report.rhs == pytest.approx(1.0 + 8.0 / math.sqrt(124.0))
    assert report.satisfied


def test_constrained_ratio_preconditions():
    with pytest.raises(FracPreconditionError):
        complete_example_5_5(1.0, 2.0, 12.0, 1.0)

    with pytest.raises(FracPreconditionError):
        run_example("5.5", 1.0, {"a": 1.0, "b": 1.0, "c": 1.0, "d": 1.0})


def test_unknown_example():
    with pytest.raises(FracPreconditionError):
        run_example("9.9", 0.5)

    with pytest.raises(FracPreconditionError):
        default_inputs("9.9", 0.5)


def test_sum_bound_on_random_feasible_inputs(rng):
    for alpha in ALPHAS:
        for _ in range(1000):
            scale = float(rng.uniform(0.01, 1.0)) * 2.0 ** alpha
            w = float(rng.uniform(0.0, 1.0))
            a = (w * scale) ** (1.0 / (3.0 * alpha))
            b = ((1.0 - w) * scale) ** (1.0 / (3.0 * alpha))

            if a <= 0.0 or b <= 0.0:
                continue

            report = run_example("5.1", alpha, {"a": a, "b": b})

            assert report.lhs <= 2.0 + 1e-12
            assert report.satisfied


@pytest.mark.parametrize("alpha", ALPHAS)
def test_mittag_leffler_midpoint_on_a_grid(alpha):
    grid = np.linspace(0.0, 4.0, 51)

    for x in grid:
        for y in grid:
            assert run_example("5.2", alpha, {"x": x, "y": y}).satisfied, (x, y)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_jensen_bound_on_random_simplex_points(rng, alpha):
    for a, b, c in rng.dirichlet(np.ones(3), size=1000):
        if abs(a + b + c - 1.0) > 1e-12 or min(a, b, c) <= 0.0:
            continue

        report = run_example("5.4", alpha, {"a": a, "b": b, "c": c})

        assert report.satisfied, (a, b, c)
        assert report.rhs >= report.grid["symmetric_value"] * (1.0 - 1e-12)
