"""
Worked scenarios built on the generalized inequalities.

:code:`5.1` - :code:`a + b <= 2` when :code:`a^(3a) + b^(3a) <= 2^a`\n
:code:`5.2` - midpoint inequality of :code:`E_a(x^a)`\n
:code:`5.3` - power mean monotonicity\n
:code:`5.4` - Jensen lower bound of :code:`sum (x_i + 1/x_i)^(10a)` on the simplex\n
:code:`5.5` - :code:`a^(3a) / c^a + b^(3a) / d^a >= 1` under :code:`c^(2a) + d^(2a) = (a^(2a) + b^(2a))^3`
"""

from typing import Union, Any, Optional, Callable

from ..expr import ML, eval_real
from ..alpha_core import Alpha
from ..types import InequalityReport
from ..params import FPModes, FPExamples
from ..exc import FracPreconditionError
from ..config import default_tolerance, relative_equality_tolerance, weight_sum_tolerance
from ..loggers import frac_logger
from .inequalities import power_mean_compare


__all__ = (
    "run_example",
    "complete_example_5_5",
    "default_inputs"
)


AlphaLike = Union[float, Alpha]


def _precondition(message: str) -> None:
    frac_logger.inequalities.error(message)
    raise FracPreconditionError(message)


def _positive(inputs: dict[str, Any], *names: str) -> list[float]:
    values = []
    for name in names:
        if name not in inputs:
            _precondition(f"missing input '{name}'")

        value = float(inputs[name])
        if value <= 0.0:
            _precondition(f"input '{name}' must be positive, got {value}")

        values.append(value)

    return values


def complete_example_5_5(a: float, b: float, c: float, alpha: AlphaLike) -> float:
    """
    Derive :code:`d` from :code:`c^(2a) + d^(2a) = (a^(2a) + b^(2a))^3`.

    Raises:
        FracPreconditionError: If an input is not positive or :code:`c` is too large.
    """

    alpha = Alpha.coerce(alpha)
    a, b, c = _positive({"a": a, "b": b, "c": c}, "a", "b", "c")

    two = 2.0 * alpha.value
    rest = (a ** two + b ** two) ** 3 - c ** two

    if rest <= 0.0:
        _precondition(f"c={c} leaves no positive d with c^(2a) + d^(2a) = (a^(2a) + b^(2a))^3")

    return rest ** (1.0 / two)


def default_inputs(example: str, alpha: AlphaLike) -> dict[str, Any]:
    """Feasible inputs of a scenario, the symmetric boundary case where there is one."""

    alpha = Alpha.coerce(alpha)

    if example == FPExamples.sum_bound:
        # a^(3a) = b^(3a) = 2^a / 2
        side = 2.0 ** ((alpha.value - 1.0) / (3.0 * alpha.value))
        return {"a": side, "b": side}

    if example == FPExamples.ml_midpoint:
        return {"x": 1.0, "y": 2.0}

    if example == FPExamples.power_mean:
        return {"data": [1.0, 2.0], "s": 1.0, "t": 2.0, "mode": FPModes.fractal}

    if example == FPExamples.jensen_bound:
        return {"a": 1.0 / 3.0, "b": 1.0 / 3.0, "c": 1.0 / 3.0}

    if example == FPExamples.constrained_ratio:
        # a = b = 1 gives c^a = d^a = 2
        side = 2.0 ** (1.0 / alpha.value)
        return {"a": 1.0, "b": 1.0, "c": side, "d": side}

    _precondition(f"unknown example '{example}', expected one of {', '.join(FPExamples.all)}")


def _sum_bound(alpha: Alpha, inputs: dict[str, Any], tol: float) -> InequalityReport:
    a, b = _positive(inputs, "a", "b")

    constraint = a ** (3.0 * alpha.value) + b ** (3.0 * alpha.value)
    bound = 2.0 ** alpha.value

    if constraint > bound * (1.0 + relative_equality_tolerance):
        _precondition(f"a^(3a) + b^(3a) <= 2^a violated: {constraint} > {bound}")

    grid = {"a": a, "b": b, "constraint": constraint}
    return InequalityReport(_check(FPExamples.sum_bound), alpha, FPModes.real, a + b, 2.0, tolerance=tol, grid=grid)


def _ml_midpoint(alpha: Alpha, inputs: dict[str, Any], tol: float) -> InequalityReport:
    if "x" not in inputs or "y" not in inputs:
        _precondition("example 5.2 needs inputs 'x' and 'y'")

    x, y = float(inputs["x"]), float(inputs["y"])

    lhs = float(eval_real(ML(), (x + y) / 2.0, alpha))
    rhs = (float(eval_real(ML(), x, alpha)) + float(eval_real(ML(), y, alpha))) / 2.0 ** alpha.value

    grid = {"x": x, "y": y}
    return InequalityReport(_check(FPExamples.ml_midpoint), alpha, FPModes.real, lhs, rhs, tolerance=tol, grid=grid)


def _power_mean(alpha: Alpha, inputs: dict[str, Any], tol: float) -> InequalityReport:
    for name in ("data", "s", "t"):
        if name not in inputs:
            _precondition(f"missing input '{name}'")

    report = power_mean_compare(
        inputs["data"], inputs["s"], inputs["t"], alpha, inputs.get("mode", FPModes.fractal), tol
    )

    return InequalityReport(
        _check(FPExamples.power_mean), alpha, report.mode, report.lhs, report.rhs, tolerance=tol, grid=report.grid
    )


def _jensen_bound(alpha: Alpha, inputs: dict[str, Any], tol: float) -> InequalityReport:
    a, b, c = _positive(inputs, "a", "b", "c")

    if abs(a + b + c - 1.0) > weight_sum_tolerance:
        _precondition(f"a + b + c = 1 violated: {a + b + c}")

    power = 10.0 * alpha.value
    value = sum((x + 1.0 / x) ** power for x in (a, b, c))
    bound = 10.0 ** power / 3.0 ** (9.0 * alpha.value)
    symmetric = 3.0 * (10.0 / 3.0) ** power

    grid = {
        "a": a,
        "b": b,
        "c": c,
        "bound": bound,
        "symmetric_value": symmetric,
        "gap": symmetric - bound
    }

    # The bound is attained only at alpha = 1
    if symmetric - bound > tol * bound:
        frac_logger.inequalities.info(f"Symmetric value {symmetric} exceeds the bound {bound}")

    return InequalityReport(_check(FPExamples.jensen_bound), alpha, FPModes.real, bound, value, tolerance=tol, grid=grid)


def _constrained_ratio(alpha: Alpha, inputs: dict[str, Any], tol: float) -> InequalityReport:
    a, b, c, d = _positive(inputs, "a", "b", "c", "d")

    two = 2.0 * alpha.value
    constraint = c ** two + d ** two
    target = (a ** two + b ** two) ** 3

    if abs(constraint - target) > relative_equality_tolerance * max(1.0, target):
        _precondition(f"c^(2a) + d^(2a) = (a^(2a) + b^(2a))^3 violated: {constraint} != {target}")

    three = 3.0 * alpha.value
    value = a ** three / c ** alpha.value + b ** three / d ** alpha.value

    grid = {"a": a, "b": b, "c": c, "d": d, "constraint": constraint}
    return InequalityReport(
        _check(FPExamples.constrained_ratio), alpha, FPModes.real, 1.0, value, tolerance=tol, grid=grid
    )


def _check(example: str) -> str:
    return f"example.{example}"


_SCENARIOS: dict[str, Callable[[Alpha, dict[str, Any], float], InequalityReport]] = {
    FPExamples.sum_bound: _sum_bound,
    FPExamples.ml_midpoint: _ml_midpoint,
    FPExamples.power_mean: _power_mean,
    FPExamples.jensen_bound: _jensen_bound,
    FPExamples.constrained_ratio: _constrained_ratio
}


def run_example(
        example: str,
        alpha: AlphaLike,
        inputs: Optional[dict[str, Any]] = None,
        tol: float = default_tolerance
) -> InequalityReport:
    """
    Verify one worked scenario.

    Args:
        example: One of :code:`FPExamples`.
        alpha: Fractal order.
        inputs: Scenario inputs, :code:`default_inputs` if not given.
        tol: Absolute tolerance on the margin.

    Returns:
        :code:`InequalityReport` in the form :code:`lhs <= rhs`.

    Raises:
        FracPreconditionError: If inputs violate the constraint of the scenario.
    """

    alpha = Alpha.coerce(alpha)
    example = str(example)

    if example not in _SCENARIOS:
        _precondition(f"unknown example '{example}', expected one of {', '.join(FPExamples.all)}")

    if inputs is None:
        inputs = default_inputs(example, alpha)

    report = _SCENARIOS[example](alpha, dict(inputs), tol)
    frac_logger.inequalities.info(f"Example {example} at alpha={alpha.value}: satisfied={report.satisfied}")
    return report
