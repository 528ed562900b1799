"""
Numeric diagnostics of the literal limit definitions.

Both are reported next to the symbolic results and never replace them: the difference
quotient disagrees with the power rule away from the anchor, and uniform Riemann sums
grow like :code:`N^(1 - a)` over real intervals.
"""

from typing import Union, Iterable

import numpy as np

from ..expr import Expr, eval_real
from ..alpha_core import Alpha
from ..special_fn import gamma1p_alpha
from ..types import QuadratureDiag
from ..utils import safe_eval
from ..config import default_h, riemann_default_ns
from ..loggers import frac_logger, LogTimer


__all__ = (
    "numeric_dalpha",
    "riemann_diag"
)


AlphaLike = Union[float, Alpha]


def numeric_dalpha(e: Expr, x0: float, alpha: AlphaLike, h: float = default_h) -> float:
    """
    Difference quotient :code:`G(1 + a) (f(x0 + h) - f(x0)) / h^a`.

    Args:
        e: Expression.
        x0: Point.
        alpha: Fractal order.
        h: Positive step.

    Raises:
        ValueError: If step is not positive.
    """

    alpha = Alpha.coerce(alpha)

    if h <= 0:
        raise ValueError("step h must be positive")

    difference = float(eval_real(e, x0 + h, alpha)) - float(eval_real(e, x0, alpha))
    return gamma1p_alpha(1, alpha) * difference / h ** alpha.value


def riemann_diag(
        e: Expr,
        a: float,
        b: float,
        alpha: AlphaLike,
        ns: Iterable[int] = riemann_default_ns
) -> QuadratureDiag:
    """
    Uniform-partition sums :code:`(1 / G(1 + a)) sum f(t_j) (dt)^a` of the literal definition.

    Note:
        Left endpoints :code:`t_j = a + j dt` are used, points outside the domain are skipped.
        The growth exponent is the least squares slope of :code:`log |sum|` against :code:`log N`.

    Args:
        e: Expression evaluable on :code:`[a, b]`.
        a: Lower limit.
        b: Upper limit.
        alpha: Fractal order.
        ns: Partition counts.

    Returns:
        :code:`QuadratureDiag` with one sum per count.
    """

    alpha = Alpha.coerce(alpha)
    ns = [int(n) for n in ns]
    timer = LogTimer()

    sums = []
    for n in ns:
        dt = (float(b) - float(a)) / n
        nodes = float(a) + dt * np.arange(n)

        values = safe_eval(lambda x: eval_real(e, x, alpha), nodes)
        values = values[np.isfinite(values)]

        sums.append(float(np.sum(values) * abs(dt) ** alpha.value / gamma1p_alpha(1, alpha)))

    sums_array = np.abs(np.asarray(sums))
    if len(ns) >= 2 and np.all(sums_array > 0):
        slope = float(np.polyfit(np.log(ns), np.log(sums_array), 1)[0])
    else:
        slope = float("nan")

    frac_logger.calc.info(f"Riemann diagnostic over {ns} in {timer.stop()} s, growth exponent {slope}")
    return QuadratureDiag(ns, sums, slope, alpha, (float(a), float(b)))
