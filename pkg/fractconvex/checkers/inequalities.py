"""
Verifiers of the generalized Jensen, Hermite-Hadamard, Cauchy-Schwarz and power mean inequalities.

Every verifier returns an :code:`InequalityReport` with its margins, nothing is asserted.
Real mode combines displayed values with ordinary arithmetic, fractal mode works on bases.
"""

import math
from typing import Union, Sequence

import numpy as np

from ..expr import Expr, AlphaPolynomial, ML, Var, PowAlpha, eval_real, eval_base
from ..alpha_core import Alpha, spow
from ..special_fn import gamma1p_alpha
from ..calculus import lfi, lfi_ml, lfi_expr, lfi_fractal
from ..types import InequalityReport
from ..params import FPModes, FPChecks
from ..exc import FracWeightsError, FracLengthMismatch, FracPreconditionError, FracConfigExc
from ..config import default_tolerance, weight_sum_tolerance, relative_equality_tolerance
from ..loggers import frac_logger


__all__ = (
    "jensen",
    "hermite_hadamard",
    "cauchy_schwarz",
    "cauchy_schwarz_via_jensen",
    "power_mean",
    "power_mean_compare"
)


AlphaLike = Union[float, Alpha]
Function = Union[Expr, AlphaPolynomial]


def _check_mode(mode: str) -> None:
    if mode not in FPModes.all:
        raise FracConfigExc(f"Unknown mode '{mode}'")


def _precondition(message: str) -> None:
    frac_logger.inequalities.error(message)
    raise FracPreconditionError(message)


def _as_expr(f: Function) -> Expr:
    return f.to_expr() if isinstance(f, AlphaPolynomial) else f


def jensen(
        e: Function,
        xs: Sequence[float],
        lambdas: Sequence[float],
        alpha: AlphaLike,
        mode: str = FPModes.real,
        tol: float = default_tolerance
) -> InequalityReport:
    """
    Generalized Jensen inequality :code:`f(sum l_i x_i) <= sum l_i^a f(x_i)`.

    Note:
        Fractal mode sums bases, :code:`phi(sum l_i x_i) <= sum l_i phi(x_i)`, and reports displays.

    Args:
        e: Function.
        xs: Points.
        lambdas: Weights in [0, 1] summing to 1 within 1e-12.
        alpha: Fractal order.
        mode: One of :code:`FPModes`.
        tol: Absolute tolerance on the margin.

    Raises:
        FracLengthMismatch: If points and weights differ in length.
        FracWeightsError: If weights are out of range or do not sum to 1.
        FracDomainError: If a point is outside the domain.
    """

    alpha = Alpha.coerce(alpha)
    _check_mode(mode)
    e = _as_expr(e)

    xs = np.asarray(xs, dtype=float)
    weights = np.asarray(lambdas, dtype=float)

    if xs.shape != weights.shape or xs.ndim != 1 or not xs.size:
        frac_logger.inequalities.error(f"{xs.size} points and {weights.size} weights")
        raise FracLengthMismatch(f"need the same non-zero number of points and weights, got {xs.size} and {weights.size}")

    if np.any(weights < 0.0) or np.any(weights > 1.0) or abs(weights.sum() - 1.0) > weight_sum_tolerance:
        frac_logger.inequalities.error(f"Bad Jensen weights {weights.tolist()}")
        raise FracWeightsError(f"weights must lie in [0, 1] and sum to 1, got {weights.tolist()}")

    mean = float(np.dot(weights, xs))

    if mode == FPModes.real:
        lhs = float(eval_real(e, mean, alpha))
        values = np.array([float(eval_real(e, x, alpha)) for x in xs])
        rhs = float(np.sum(weights ** alpha.value * values))

    else:
        lhs = spow(float(eval_base(e, mean, alpha)), alpha.value)
        bases = np.array([float(eval_base(e, x, alpha)) for x in xs])
        rhs = spow(float(np.dot(weights, bases)), alpha.value)

    grid = {"xs": xs.tolist(), "lambdas": weights.tolist(), "mean": mean, "expr": str(e)}

    report = InequalityReport(FPChecks.jensen, alpha, mode, lhs, rhs, tolerance=tol, grid=grid)
    frac_logger.inequalities.info(f"Jensen for '{e}' in {mode} mode: margin {report.margins[0]}")
    return report


def _hh_real_mid(f: Function, a: float, b: float, alpha: Alpha) -> float:
    if isinstance(f, AlphaPolynomial):
        integral = lfi(f, a, b, alpha)
    elif isinstance(f, ML):
        integral = lfi_ml(b, alpha, a)
    else:
        integral = lfi_expr(f, a, b, alpha)

    return gamma1p_alpha(1, alpha) / (b - a) ** alpha.value * integral


def hermite_hadamard(
        f: Function,
        a: float,
        b: float,
        alpha: AlphaLike,
        mode: str = FPModes.real,
        tol: float = default_tolerance
) -> InequalityReport:
    """
    Generalized Hermite-Hadamard inequality
    :code:`f((a + b) / 2) <= G(1 + a) / (b - a)^a aIb f <= (f(a) + f(b)) / 2^a`.

    Note:
        Real mode integrates exactly, so the function must be an alpha polynomial anchored at :code:`a`
        or the Mittag-Leffler atom with :code:`a = 0`. Fractal mode integrates the base image by quadrature,
        the middle term is then the display of the classical average of the base image.

    Args:
        f: Alpha polynomial, Mittag-Leffler atom or expression.
        a: Left end.
        b: Right end.
        alpha: Fractal order.
        mode: One of :code:`FPModes`.
        tol: Absolute tolerance on margins.

    Returns:
        :code:`InequalityReport` with the triple and both margins.

    Raises:
        FracPreconditionError: If not :code:`a < b`.
        FracAnchorMismatch: If the integrand is not anchored at :code:`a` in real mode.
    """

    alpha = Alpha.coerce(alpha)
    _check_mode(mode)
    a, b = float(a), float(b)

    if not a < b:
        _precondition(f"Hermite-Hadamard needs a < b, got a={a}, b={b}")

    e = _as_expr(f)
    midpoint = (a + b) / 2.0

    if mode == FPModes.real:
        lhs = float(eval_real(e, midpoint, alpha))
        mid = _hh_real_mid(f, a, b, alpha)
        rhs = (float(eval_real(e, a, alpha)) + float(eval_real(e, b, alpha))) / 2.0 ** alpha.value

    else:
        lhs = spow(float(eval_base(e, midpoint, alpha)), alpha.value)
        mid = gamma1p_alpha(1, alpha) / (b - a) ** alpha.value * lfi_fractal(e, a, b, alpha).display
        rhs = spow((float(eval_base(e, a, alpha)) + float(eval_base(e, b, alpha))) / 2.0, alpha.value)

    grid = {"interval": [a, b], "expr": str(e)}

    report = InequalityReport(FPChecks.hh, alpha, mode, lhs, rhs, mid=mid, tolerance=tol, grid=grid)
    frac_logger.inequalities.info(f"Hermite-Hadamard for '{e}' on [{a}, {b}]: {lhs} <= {mid} <= {rhs}")
    return report


def _check_pair(as_: Sequence[float], bs: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(as_, dtype=float)
    b = np.asarray(bs, dtype=float)

    if a.shape != b.shape or a.ndim != 1:
        frac_logger.inequalities.error(f"Vectors of length {a.size} and {b.size}")
        raise FracLengthMismatch(f"vectors must have the same length, got {a.size} and {b.size}")

    if not a.size:
        _precondition("vectors must not be empty")

    return a, b


def _proportional(u: np.ndarray, v: np.ndarray) -> bool:
    """All 2x2 minors of (u, v) vanish relative to the largest entries."""

    scale = max(float(u.max()), 1e-300) * max(float(v.max()), 1e-300)
    minors = np.outer(u, v) - np.outer(v, u)
    return bool(np.abs(minors).max() <= relative_equality_tolerance * scale)


def cauchy_schwarz(
        as_: Sequence[float],
        bs: Sequence[float],
        alpha: AlphaLike,
        tol: float = default_tolerance
) -> InequalityReport:
    """
    Generalized Cauchy-Schwarz inequality
    :code:`sum |a_k|^a |b_k|^a <= (sum |a_k|^(2a))^(1/2) (sum |b_k|^(2a))^(1/2)`.

    Note:
        Zero entries are accepted and flagged in :code:`grid["zero_entries"]`.
        :code:`grid["proportional"]` tells whether :code:`|a|^a` and :code:`|b|^a` are proportional,
        the case of equality.

    Raises:
        FracLengthMismatch: If vectors differ in length.
    """

    alpha = Alpha.coerce(alpha)
    a, b = _check_pair(as_, bs)

    u = np.abs(a) ** alpha.value
    v = np.abs(b) ** alpha.value

    lhs = float(np.sum(u * v))
    rhs = math.sqrt(float(np.sum(u * u))) * math.sqrt(float(np.sum(v * v)))

    zero_entries = bool(np.any(a == 0.0) or np.any(b == 0.0))
    if zero_entries:
        frac_logger.inequalities.info("Cauchy-Schwarz with zero entries, limit case")

    grid = {
        "a": a.tolist(),
        "b": b.tolist(),
        "zero_entries": zero_entries,
        "proportional": _proportional(u, v)
    }

    return InequalityReport(FPChecks.cs, alpha, FPModes.real, lhs, rhs, tolerance=tol, grid=grid)


def cauchy_schwarz_via_jensen(
        as_: Sequence[float],
        bs: Sequence[float],
        alpha: AlphaLike,
        tol: float = default_tolerance
) -> InequalityReport:
    """
    Jensen instance behind Cauchy-Schwarz: :code:`f = x^(2a)`, :code:`l_k = b_k^2 / sum b^2`,
    :code:`x_k = |a_k| / |b_k|`.

    Raises:
        FracPreconditionError: If some :code:`b_k` is 0.
    """

    a, b = _check_pair(as_, bs)

    if np.any(b == 0.0):
        _precondition("Cauchy-Schwarz through Jensen needs every b_k != 0")

    weights = b ** 2 / np.sum(b ** 2)
    # Rounding must not break the weight sum check
    weights[-1] = 1.0 - float(np.sum(weights[:-1]))

    report = jensen(PowAlpha(Var(), 2), np.abs(a) / np.abs(b), np.clip(weights, 0.0, 1.0), alpha, tol=tol)

    grid = dict(report.grid)
    grid.update(a=a.tolist(), b=b.tolist())

    return InequalityReport(
        f"{FPChecks.cs}-via-{FPChecks.jensen}", report.alpha, report.mode, report.lhs, report.rhs,
        tolerance=tol, grid=grid
    )


def _check_data(as_: Sequence[float]) -> np.ndarray:
    data = np.asarray(as_, dtype=float)

    if data.ndim != 1 or not data.size:
        _precondition("power mean needs a non-empty list of numbers")

    if np.any(data <= 0.0):
        _precondition(f"power mean needs positive data, got {data.tolist()}")

    return data


def _classical_mean(data: np.ndarray, r: float) -> float:
    # Negative orders through b_i = 1 / a_i
    if r < 0:
        return 1.0 / _classical_mean(1.0 / data, -r)

    return float(np.mean(data ** r)) ** (1.0 / r)


def power_mean(
        as_: Sequence[float],
        r: float,
        alpha: AlphaLike,
        mode: str = FPModes.fractal
) -> float:
    """
    Generalized power mean :code:`S_r = ((a_1^(ar) + ... + a_n^(ar)) / n^a)^(1/r)`.

    Note:
        Fractal mode sums in R^a, so :code:`S_r` is the alpha power of the classical power mean.
        Real mode takes the formula literally with real sums. Fractal mode is the default,
        the literal reading is not monotone in :code:`r`.

    Args:
        as_: Positive data.
        r: Non-zero order.
        alpha: Fractal order.
        mode: One of :code:`FPModes`.

    Raises:
        FracPreconditionError: If data is not positive or :code:`r` is 0.
    """

    alpha = Alpha.coerce(alpha)
    _check_mode(mode)
    data = _check_data(as_)
    r = float(r)

    if r == 0.0:
        _precondition("power mean order r must not be 0")

    if mode == FPModes.fractal:
        return _classical_mean(data, r) ** alpha.value

    total = float(np.sum(data ** (alpha.value * r)))
    return (total / len(data) ** alpha.value) ** (1.0 / r)


def power_mean_compare(
        as_: Sequence[float],
        s: float,
        t: float,
        alpha: AlphaLike,
        mode: str = FPModes.fractal,
        tol: float = default_tolerance
) -> InequalityReport:
    """
    Monotonicity :code:`S_s <= S_t` of the power mean.

    Note:
        Orders must satisfy :code:`0 < s < t` or :code:`s < t < 0`. Real mode may fail,
        the report says so honestly.

    Raises:
        FracPreconditionError: If orders are not ordered or have different signs.
    """

    alpha = Alpha.coerce(alpha)
    s, t = float(s), float(t)

    if not s < t:
        _precondition(f"power mean comparison needs s < t, got s={s}, t={t}")

    if not (0.0 < s or t < 0.0):
        _precondition(f"power mean comparison needs 0 < s < t or s < t < 0, got s={s}, t={t}")

    data = _check_data(as_)
    lhs = power_mean(data, s, alpha, mode)
    rhs = power_mean(data, t, alpha, mode)

    grid = {
        "data": data.tolist(),
        "s": s,
        "t": t,
        "equal_data": bool(data.max() / data.min() - 1.0 <= 1e-12)
    }

    report = InequalityReport(FPChecks.powermean, alpha, mode, lhs, rhs, tolerance=tol, grid=grid)

    if mode == FPModes.real and not report.satisfied:
        frac_logger.inequalities.warning(f"Literal power mean decreases from S_{s}={lhs} to S_{t}={rhs}")

    return report
