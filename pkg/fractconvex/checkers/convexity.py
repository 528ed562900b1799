"""
Generalized convexity characterizations on sampling grids.

A function :code:`f : I -> R^a` is generalized convex if
:code:`f(l x1 + (1 - l) x2) <= l^a f(x1) + (1 - l)^a f(x2)` for all :code:`x1, x2` in I and
:code:`l` in [0, 1]. The chord test is the canonical one, the derivative based tests corroborate it.
Verdicts only cover the sampled grid.
"""

from typing import Union, Optional, Callable

import numpy as np

from ..expr import Expr, eval_real, eval_base
from ..alpha_core import Alpha, spow
from ..special_fn import gamma1p_alpha
from ..calculus import alpha_diff
from ..types import ConvexityReport
from ..tuples import Witness, SlopeDiag, SlopeChain, CrossCheck
from ..params import FPModes, FPVerdicts, FPConvexityMethods
from ..utils import safe_eval, node_grid, chord_pairs, lambda_grid, violates
from ..exc import FracCalcExc, FracEvalExc, FracPreconditionError, FracConfigExc
from ..config import (
    default_tolerance,
    strict_margin,
    monotone_tolerance,
    default_chord_pairs,
    default_chord_lambdas,
    default_derivative_points,
    default_support_points,
    max_witnesses
)
from ..loggers import frac_logger, LogTimer


__all__ = (
    "chord_check",
    "slope_diag",
    "slope_chain_diag",
    "grad_monotone_check",
    "support_line_check",
    "second_deriv_check",
    "convexity_reports",
    "cross_check"
)


AlphaLike = Union[float, Alpha]
Interval = tuple[float, float]


def _check_interval(interval: Interval) -> Interval:
    lo, hi = float(interval[0]), float(interval[1])

    if not lo < hi:
        frac_logger.convexity.error(f"Empty interval [{lo}, {hi}]")
        raise FracPreconditionError(f"interval needs lo < hi, got [{lo}, {hi}]")

    return lo, hi


def _evaluator(e: Expr, alpha: Alpha, mode: str) -> Callable:
    if mode == FPModes.real:
        return lambda x: eval_real(e, x, alpha)

    if mode == FPModes.fractal:
        return lambda x: eval_base(e, x, alpha)

    raise FracConfigExc(f"Unknown mode '{mode}'")


def _witnesses(mask: np.ndarray, build: Callable[[tuple[int, ...]], Witness]) -> list[Witness]:
    """First violations in row-major grid order."""

    return [build(tuple(index)) for index in np.argwhere(mask)[:max_witnesses]]


def _skipped_reason(skipped: int) -> Optional[str]:
    return f"{skipped} grid values outside the domain" if skipped else None


def chord_check(
        e: Expr,
        interval: Interval,
        alpha: AlphaLike,
        mode: str = FPModes.real,
        n_pairs: int = default_chord_pairs,
        n_lambda: int = default_chord_lambdas,
        strict: bool = False,
        tol: float = default_tolerance
) -> ConvexityReport:
    """
    Chord inequality :code:`f(l x1 + (1 - l) x2) <= l^a f(x1) + (1 - l)^a f(x2)` on a grid.

    Note:
        Real mode combines displayed values with real arithmetic. Fractal mode compares bases,
        :code:`phi(l x1 + (1 - l) x2) <= l phi(x1) + (1 - l) phi(x2)` for the base image :code:`phi`.
        Strict checks exclude :code:`l` in {0, 1} and need a gap larger than 1e-10,
        ties are inconclusive. The reversed inequality gives the concave flag.

    Args:
        e: Expression.
        interval: :code:`(lo, hi)`.
        alpha: Fractal order.
        mode: One of :code:`FPModes`.
        n_pairs: Node pairs :code:`x1 < x2`.
        n_lambda: Lambda values including 0 and 1.
        strict: Check strict convexity.
        tol: Scaled tolerance of violations.

    Returns:
        :code:`ConvexityReport`, inconclusive if grid points are outside the domain.
    """

    alpha = Alpha.coerce(alpha)
    lo, hi = _check_interval(interval)
    fn = _evaluator(e, alpha, mode)
    timer = LogTimer()

    pairs = np.asarray(chord_pairs(lo, hi, n_pairs))
    lambdas = lambda_grid(n_lambda)

    x1 = pairs[:, 0][:, None]
    x2 = pairs[:, 1][:, None]
    lam = lambdas[None, :]
    mids = lam * x1 + (1.0 - lam) * x2

    try:
        f1 = safe_eval(fn, pairs[:, 0])[:, None]
        f2 = safe_eval(fn, pairs[:, 1])[:, None]
        lhs = safe_eval(fn, mids)

    except FracEvalExc as error:
        return ConvexityReport(
            FPConvexityMethods.chord, FPVerdicts.inconclusive, mode, alpha,
            tolerance=tol, reason=str(error), expr=str(e)
        )

    if mode == FPModes.real:
        rhs = lam ** alpha.value * f1 + (1.0 - lam) ** alpha.value * f2
    else:
        rhs = lam * f1 + (1.0 - lam) * f2

    rhs = np.broadcast_to(rhs, lhs.shape)
    valid = np.isfinite(lhs) & np.isfinite(rhs)

    with np.errstate(invalid="ignore"):
        violation = valid & violates(lhs, rhs, tol)
        reversed_violation = valid & violates(rhs, lhs, tol)

        if strict:
            inner = (lambdas > 0.0) & (lambdas < 1.0)
            tie = valid & inner[None, :] & ~violation & (rhs - lhs <= strict_margin)
        else:
            tie = np.zeros_like(valid)

    def build(index: tuple[int, ...]) -> Witness:
        i, j = index
        return Witness(float(pairs[i, 0]), float(lambdas[j]), float(pairs[i, 1]), float(lhs[i, j]), float(rhs[i, j]))

    witnesses = _witnesses(violation, build)
    skipped = int((~valid).sum())
    margins = (rhs - lhs)[valid]
    worst = float(margins.min()) if margins.size else None
    reason = _skipped_reason(skipped)

    if witnesses:
        verdict = FPVerdicts.nonconvex
    elif skipped == valid.size:
        verdict = FPVerdicts.inconclusive
        reason = "no grid value inside the domain"
    elif skipped:
        verdict = FPVerdicts.inconclusive
    elif strict and tie.any():
        verdict = FPVerdicts.inconclusive
        reason = f"{int(tie.sum())} ties within the strict margin {strict_margin}"
    else:
        verdict = FPVerdicts.strictly_convex if strict else FPVerdicts.convex

    grid = {
        "interval": [lo, hi],
        "n_pairs": int(len(pairs)),
        "n_lambda": int(len(lambdas)),
        "strict": bool(strict),
        "values": "display" if mode == FPModes.real else "base"
    }

    frac_logger.convexity.info(f"Chord check of '{e}' in {mode} mode: {verdict} in {timer.stop()} s")
    return ConvexityReport(
        FPConvexityMethods.chord, verdict, mode, alpha,
        witnesses=witnesses,
        grid=grid,
        tolerance=tol,
        concave=bool(valid.any()) and not reversed_violation.any(),
        worst_margin=worst,
        reason=reason,
        expr=str(e)
    )


def _check_triple(triple: tuple[float, ...]) -> tuple[float, ...]:
    points = tuple(float(x) for x in triple)

    if not all(a < b for a, b in zip(points, points[1:])):
        frac_logger.convexity.error(f"Points {points} are not increasing")
        raise FracPreconditionError(f"points must satisfy x1 < x2 < x3, got {points}")

    return points


def _base_values(e: Expr, points: tuple[float, ...], alpha: Alpha) -> Optional[list[float]]:
    try:
        return [float(eval_base(e, x, alpha)) for x in points]

    except FracEvalExc:
        return None


def _holds(lower: float, upper: float, tol: float) -> bool:
    return not bool(violates(lower, upper, tol))


def slope_diag(
        e: Expr,
        triple: tuple[float, float, float],
        alpha: AlphaLike,
        tol: float = default_tolerance
) -> SlopeDiag:
    """
    Slope characterization :code:`(f(x1) - f(x2)) / (x1 - x2)^a <= (f(x3) - f(x2)) / (x3 - x2)^a`.

    Note:
        Diagnostic, both readings are reported. Real reading uses displayed values and the signed
        power of the negative difference. Fractal reading compares quotients of bases, shown as displays.
        The fractal reading is empty for the Mittag-Leffler atom.

    Raises:
        FracPreconditionError: If not :code:`x1 < x2 < x3`.
        FracDomainError: If a point is outside the domain.
    """

    alpha = Alpha.coerce(alpha)
    x1, x2, x3 = _check_triple(triple)

    f1, f2, f3 = (float(eval_real(e, x, alpha)) for x in (x1, x2, x3))
    lhs = (f1 - f2) / spow(x1 - x2, alpha.value)
    rhs = (f3 - f2) / spow(x3 - x2, alpha.value)

    bases = _base_values(e, (x1, x2, x3), alpha)
    if bases is None:
        return SlopeDiag(lhs, rhs, _holds(lhs, rhs, tol), None, None, None)

    b1, b2, b3 = bases
    base_lhs = (b1 - b2) / (x1 - x2)
    base_rhs = (b3 - b2) / (x3 - x2)

    return SlopeDiag(
        lhs, rhs, _holds(lhs, rhs, tol),
        spow(base_lhs, alpha.value), spow(base_rhs, alpha.value), _holds(base_lhs, base_rhs, tol)
    )


def slope_chain_diag(
        e: Expr,
        triple: tuple[float, float, float],
        alpha: AlphaLike,
        tol: float = default_tolerance
) -> SlopeChain:
    """
    Three-slope chain :code:`s12 <= s13 <= s23` with :code:`sij = (f(xj) - f(xi)) / (xj - xi)^a`.

    Raises:
        FracPreconditionError: If not :code:`x1 < x2 < x3`.
    """

    alpha = Alpha.coerce(alpha)
    points = _check_triple(triple)
    x1, x2, x3 = points

    f1, f2, f3 = (float(eval_real(e, x, alpha)) for x in points)
    slopes = (
        (f2 - f1) / spow(x2 - x1, alpha.value),
        (f3 - f1) / spow(x3 - x1, alpha.value),
        (f3 - f2) / spow(x3 - x2, alpha.value)
    )
    holds = _holds(slopes[0], slopes[1], tol) and _holds(slopes[1], slopes[2], tol)

    bases = _base_values(e, points, alpha)
    if bases is None:
        return SlopeChain(slopes, holds, None, None)

    b1, b2, b3 = bases
    base_slopes = ((b2 - b1) / (x2 - x1), (b3 - b1) / (x3 - x1), (b3 - b2) / (x3 - x2))
    fractal_holds = _holds(base_slopes[0], base_slopes[1], tol) and _holds(base_slopes[1], base_slopes[2], tol)

    return SlopeChain(slopes, holds, tuple(spow(s, alpha.value) for s in base_slopes), fractal_holds)


def _derivative_values(e: Expr, alpha: Alpha, order: int, nodes: np.ndarray) -> np.ndarray:
    derivative = alpha_diff(e, alpha, order).derivative
    return safe_eval(lambda x: eval_real(derivative, x, alpha), nodes)


def grad_monotone_check(
        e: Expr,
        interval: Interval,
        alpha: AlphaLike,
        n: int = default_derivative_points,
        tol: float = monotone_tolerance
) -> ConvexityReport:
    """
    Convex iff :code:`f^(a)` is non-decreasing, checked on :code:`n` nodes.

    Raises:
        FracOutOfRuleSet: If the derivative is outside the rule set.
    """

    alpha = Alpha.coerce(alpha)
    lo, hi = _check_interval(interval)
    nodes = node_grid(lo, hi, n)

    values = _derivative_values(e, alpha, 1, nodes)
    left, right = values[:-1], values[1:]
    valid = np.isfinite(left) & np.isfinite(right)

    with np.errstate(invalid="ignore"):
        decrease = valid & violates(left, right, tol)
        increase = valid & violates(right, left, tol)

    def build(index: tuple[int, ...]) -> Witness:
        i = index[0]
        return Witness(float(nodes[i]), None, float(nodes[i + 1]), float(left[i]), float(right[i]))

    return _derivative_report(
        FPConvexityMethods.gradient, e, alpha, tol, nodes, values,
        _witnesses(decrease, build), bool(valid.any()) and not increase.any(),
        float(np.min((right - left)[valid])) if valid.any() else None
    )


def support_line_check(
        e: Expr,
        interval: Interval,
        alpha: AlphaLike,
        n: int = default_support_points,
        tol: float = default_tolerance
) -> ConvexityReport:
    """
    Supporting line :code:`f(x1) + f^(a)(x1) / G(1 + a) (x2 - x1)^a <= f(x2)` for all node pairs.

    Note:
        All ordered pairs of :code:`n` nodes are checked, negative differences use the signed power.
        Witnesses hold the support value as :code:`lhs` and :code:`f(x2)` as :code:`rhs`.

    Raises:
        FracOutOfRuleSet: If the derivative is outside the rule set.
    """

    alpha = Alpha.coerce(alpha)
    lo, hi = _check_interval(interval)
    nodes = node_grid(lo, hi, n)

    f = safe_eval(lambda x: eval_real(e, x, alpha), nodes)
    df = _derivative_values(e, alpha, 1, nodes)

    x1 = nodes[:, None]
    x2 = nodes[None, :]
    support = f[:, None] + df[:, None] / gamma1p_alpha(1, alpha) * spow(x2 - x1, alpha.value)
    target = np.broadcast_to(f[None, :], support.shape)

    off_diagonal = ~np.eye(len(nodes), dtype=bool)
    valid = off_diagonal & np.isfinite(support) & np.isfinite(target)

    with np.errstate(invalid="ignore"):
        violation = valid & violates(support, target, tol)
        reversed_violation = valid & violates(target, support, tol)

    def build(index: tuple[int, ...]) -> Witness:
        i, j = index
        return Witness(float(nodes[i]), None, float(nodes[j]), float(support[i, j]), float(target[i, j]))

    skipped = int((off_diagonal & ~valid).sum())
    return _derivative_report(
        FPConvexityMethods.support, e, alpha, tol, nodes, None,
        _witnesses(violation, build), bool(valid.any()) and not reversed_violation.any(),
        float(np.min((target - support)[valid])) if valid.any() else None,
        skipped=skipped
    )


def second_deriv_check(
        e: Expr,
        interval: Interval,
        alpha: AlphaLike,
        n: int = default_derivative_points,
        tol: float = monotone_tolerance
) -> ConvexityReport:
    """
    Sign of :code:`f^(2a)` on :code:`n` nodes.

    Note:
        Convex if :code:`f^(2a) >= -1e-10` everywhere, concave if :code:`f^(2a) <= 1e-10`,
        otherwise nonconvex. A zero second derivative gives convex with the concave flag.

    Raises:
        FracOutOfRuleSet: If the rule set can not be applied twice.
    """

    alpha = Alpha.coerce(alpha)
    lo, hi = _check_interval(interval)
    nodes = node_grid(lo, hi, n)

    values = _derivative_values(e, alpha, 2, nodes)
    valid = np.isfinite(values)

    with np.errstate(invalid="ignore"):
        negative = valid & (values < -tol)
        positive = valid & (values > tol)

    def build(index: tuple[int, ...]) -> Witness:
        i = index[0]
        return Witness(float(nodes[i]), None, None, 0.0, float(values[i]))

    concave = bool(valid.any()) and not positive.any()
    report = _derivative_report(
        FPConvexityMethods.second, e, alpha, tol, nodes, values,
        _witnesses(negative, build), concave,
        float(values[valid].min()) if valid.any() else None
    )

    # Concave functions get their own verdict here
    if report.verdict == FPVerdicts.nonconvex and concave:
        return ConvexityReport(
            FPConvexityMethods.second, FPVerdicts.concave, FPModes.real, alpha,
            witnesses=report.witnesses,
            grid=report.grid,
            tolerance=tol,
            concave=True,
            worst_margin=report.worst_margin,
            reason=report.reason,
            expr=report.expr
        )

    return report


def _derivative_report(
        method: str,
        e: Expr,
        alpha: Alpha,
        tol: float,
        nodes: np.ndarray,
        values: Optional[np.ndarray],
        witnesses: list[Witness],
        concave: bool,
        worst: Optional[float],
        skipped: Optional[int] = None
) -> ConvexityReport:

    if skipped is None:
        skipped = int((~np.isfinite(values)).sum())

    reason = _skipped_reason(skipped)

    if witnesses:
        verdict = FPVerdicts.nonconvex
    elif worst is None:
        verdict = FPVerdicts.inconclusive
        reason = "no grid value inside the domain"
    elif skipped:
        verdict = FPVerdicts.inconclusive
    else:
        verdict = FPVerdicts.convex

    grid = {"interval": [float(nodes[0]), float(nodes[-1])], "n_points": int(len(nodes))}

    frac_logger.convexity.info(f"{method} check of '{e}': {verdict}")
    return ConvexityReport(
        method, verdict, FPModes.real, alpha,
        witnesses=witnesses,
        grid=grid,
        tolerance=tol,
        concave=concave,
        worst_margin=worst,
        reason=reason,
        expr=str(e)
    )


def convexity_reports(
        e: Expr,
        interval: Interval,
        alpha: AlphaLike,
        n_pairs: int = default_chord_pairs,
        n_lambda: int = default_chord_lambdas,
        n_points: int = default_derivative_points,
        n_support: int = default_support_points
) -> dict[str, ConvexityReport]:
    """
    Reports of all four characterizations in real mode.

    Note:
        A check whose derivative leaves the rule set gets an inconclusive report naming the reason.
    """

    alpha = Alpha.coerce(alpha)

    checks = {
        FPConvexityMethods.chord: lambda: chord_check(e, interval, alpha, FPModes.real, n_pairs, n_lambda),
        FPConvexityMethods.gradient: lambda: grad_monotone_check(e, interval, alpha, n_points),
        FPConvexityMethods.support: lambda: support_line_check(e, interval, alpha, n_support),
        FPConvexityMethods.second: lambda: second_deriv_check(e, interval, alpha, n_points)
    }

    reports = {}
    for method, check in checks.items():
        try:
            reports[method] = check()

        except FracCalcExc as error:
            frac_logger.convexity.info(f"{method} check of '{e}' is not applicable: {error}")
            reports[method] = ConvexityReport(
                method, FPVerdicts.inconclusive, FPModes.real, alpha, reason=str(error), expr=str(e)
            )

    return reports


def cross_check(
        e: Expr,
        interval: Interval,
        alpha: AlphaLike,
        n_pairs: int = default_chord_pairs,
        n_lambda: int = default_chord_lambdas,
        n_points: int = default_derivative_points,
        n_support: int = default_support_points,
        reports: Optional[dict[str, ConvexityReport]] = None
) -> CrossCheck:
    """
    Compare the verdicts of all four characterizations.

    Note:
        Inconclusive verdicts do not count as disagreement. A disagreement is logged as a warning
        on the convexity logger.

    Args:
        reports: Reports computed before, :code:`convexity_reports` is run if not given.

    Returns:
        :code:`CrossCheck` - verdict per method and agreement flag.
    """

    alpha = Alpha.coerce(alpha)

    if reports is None:
        reports = convexity_reports(e, interval, alpha, n_pairs, n_lambda, n_points, n_support)

    verdicts = {method: report.verdict for method, report in reports.items()}
    decided = {verdict in FPVerdicts.positive for verdict in verdicts.values() if verdict != FPVerdicts.inconclusive}
    agree = len(decided) <= 1

    if not agree:
        frac_logger.convexity.warning(
            f"Convexity characterizations disagree for '{e}' at alpha={alpha.value}: {verdicts}"
        )

    return CrossCheck(verdicts, agree)
