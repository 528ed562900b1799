from typing import Union, Optional

import numpy as np

from .symbolic import alpha_diff_once
from ..expr import Expr, AlphaPolynomial, eval_real
from ..alpha_core import Alpha, spow
from ..special_fn import gamma1p_alpha
from ..tuples import TaylorResult
from ..utils import safe_eval, node_grid
from ..exc import FracNotPolynomial, FracOutOfRuleSet, FracRuleSetExhausted, FracAnchorMismatch
from ..config import taylor_grid_points, default_taylor_width
from ..loggers import frac_logger, LogTimer


__all__ = (
    "taylor_alpha",
)


AlphaLike = Union[float, Alpha]


def _exhausted(reason: str, n: int) -> None:
    frac_logger.calc.error(f"Rule set exhausted before order {n + 1}: {reason}")
    raise FracRuleSetExhausted(f"derivative rule set exhausted before order {n + 1}: {reason}")


def _polynomial_derivatives(p: AlphaPolynomial, n: int, alpha: Alpha) -> list[AlphaPolynomial]:
    derivatives = [p]

    try:
        for _ in range(n + 1):
            derivatives.append(derivatives[-1].alpha_derivative(alpha))

    except FracNotPolynomial as error:
        _exhausted(str(error), n)

    return derivatives


def _symbolic_derivatives(e: Expr, n: int, alpha: Alpha) -> list[Expr]:
    derivatives = [e]

    try:
        for _ in range(n + 1):
            derivatives.append(alpha_diff_once(derivatives[-1], alpha))

    except FracOutOfRuleSet as error:
        _exhausted(str(error), n)

    return derivatives


def taylor_alpha(
        f: Union[Expr, AlphaPolynomial],
        x0: float,
        n: int,
        alpha: AlphaLike,
        interval: Optional[tuple[float, float]] = None
) -> TaylorResult:
    """
    Generalized Taylor polynomial :code:`T_n = sum_(k<=n) f^(ka)(x0) / G(1 + k a) (x - x0)^(k a)`.

    Note:
        Alpha polynomials anchored at :code:`x0` are differentiated term-wise and give exact
        coefficients, other expressions go through the symbolic rule set and are evaluated at :code:`x0`.
        The remainder bound is the maximum of :code:`|f^((n+1)a)(x)| / G(1 + (n+1) a) |x - x0|^((n+1) a)`
        over a 1001-point grid of the interval, points outside the domain are skipped.

    Args:
        f: Expression or alpha polynomial.
        x0: Expansion point.
        n: Order of the polynomial.
        alpha: Fractal order.
        interval: Interval of the remainder bound, :code:`[x0, x0 + 1]` if not given.

    Returns:
        :code:`TaylorResult` - polynomial anchored at :code:`x0`, remainder bound and its interval.

    Raises:
        FracRuleSetExhausted: If the rule set can not be applied :code:`n + 1` times.
        FracAnchorMismatch: If a polynomial is anchored away from :code:`x0`.
    """

    alpha = Alpha.coerce(alpha)
    x0 = float(x0)
    timer = LogTimer()

    if interval is None:
        interval = (x0, x0 + default_taylor_width)

    interval = (float(interval[0]), float(interval[1]))
    grid = node_grid(interval[0], interval[1], taylor_grid_points)

    polynomial = None
    if isinstance(f, AlphaPolynomial):
        if f.anchor != x0:
            frac_logger.calc.error(f"Polynomial anchored at {f.anchor}, expansion point is {x0}")
            raise FracAnchorMismatch(f"polynomial anchored at {f.anchor}, not at {x0}")

        polynomial = f

    else:
        try:
            polynomial = AlphaPolynomial.from_expr(f, x0, alpha)

        except FracNotPolynomial:
            frac_logger.calc.debug(f"'{f}' is not anchored at {x0}, using the symbolic rule set")

    if polynomial is not None:
        derivatives = _polynomial_derivatives(polynomial, n, alpha)
        values = [d.coefficient(0) for d in derivatives[:n + 1]]
        last = derivatives[-1].evaluate(grid, alpha)

    else:
        derivatives = _symbolic_derivatives(f, n, alpha)
        values = [float(eval_real(d, x0, alpha)) for d in derivatives[:n + 1]]
        last = safe_eval(lambda x: eval_real(derivatives[-1], x, alpha), grid)

    coefficients = [(k, value / gamma1p_alpha(k, alpha)) for k, value in enumerate(values)]
    result = AlphaPolynomial(x0, coefficients)

    weights = spow(np.abs(grid - x0), alpha.times(n + 1)) / gamma1p_alpha(n + 1, alpha)
    terms = np.abs(np.asarray(last, dtype=float)) * weights

    finite = terms[np.isfinite(terms)]
    remainder = float(finite.max()) if finite.size else float("inf")

    frac_logger.calc.info(f"Taylor polynomial of order {n} about {x0} in {timer.stop()} s")
    return TaylorResult(result, remainder, interval)
