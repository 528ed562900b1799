"""
Evaluation of expressions in both arithmetics.

Real mode combines displayed values with ordinary + and x. Fractal mode combines the
bases of R^a elements, so its result is the classical value of the base image.
Both accept a scalar or a numpy array of points.
"""

from typing import Union

import numpy as np

from .nodes import Expr, Const, ConstAlpha, Var, Add, Sub, Mul, Div, Neg, PowAlpha, PowClassical, ML
from ..alpha_core import Alpha, FractalNumber, spow
from ..special_fn import mittag_leffler
from ..exc import FracDomainError, FracUnsupportedMode
from ..loggers import frac_logger


__all__ = (
    "eval_real",
    "eval_base",
    "eval_fractal",
    "at_alpha_one"
)


Points = Union[float, np.ndarray]
AlphaLike = Union[float, Alpha]


def _as_points(x: Points) -> Points:
    return np.asarray(x, dtype=float) if isinstance(x, (np.ndarray, list, tuple)) else float(x)


def _like(x: Points, value: float) -> Points:
    return np.full_like(x, value, dtype=float) if isinstance(x, np.ndarray) else float(value)


def _domain_error(message: str, e: Expr) -> None:
    frac_logger.calc.error(f"Domain error: {message} in '{e}'")
    raise FracDomainError(message, str(e))


def _any(condition: Union[bool, np.ndarray]) -> bool:
    return bool(np.any(condition))


def _divide(numerator: Points, denominator: Points, e: Expr) -> Points:
    if _any(denominator == 0):
        _domain_error("division by zero", e)

    return numerator / denominator


def _classical_power(u: Points, r, e: Expr) -> Points:
    """Ordinary power, integer exponents keep the sign rules of repeated products."""

    if r < 0 and _any(u == 0):
        _domain_error("zero to a negative power", e)

    if r.denominator == 1:
        return u ** int(r) if isinstance(u, np.ndarray) else float(u) ** int(r)

    if _any(u < 0):
        _domain_error(f"negative base to non-integer power {r}", e)

    return u ** (r.numerator / r.denominator)


def _alpha_power(u: Points, beta: float, e: Expr) -> Points:
    if beta < 0 and _any(u == 0):
        _domain_error("zero to a negative power", e)

    return spow(u, beta)


def eval_real(e: Expr, x: Points, alpha: AlphaLike) -> Points:
    """
    Evaluate with displayed values and real arithmetic.

    Args:
        e: Expression.
        x: Point or array of points.
        alpha: Fractal order.

    Returns:
        Value of the same shape as :code:`x`.

    Raises:
        FracDomainError: If a point is outside the natural domain, names the sub-expression.
        FracOverflow: If the Mittag-Leffler series overflows.
    """

    return _real(e, _as_points(x), Alpha.coerce(alpha))


def _real(e: Expr, x: Points, alpha: Alpha) -> Points:
    if isinstance(e, Const):
        return _like(x, e.value)

    if isinstance(e, ConstAlpha):
        return _like(x, spow(e.base, alpha.value))

    if isinstance(e, Var):
        return x.copy() if isinstance(x, np.ndarray) else x

    if isinstance(e, ML):
        if isinstance(x, np.ndarray):
            return np.vectorize(lambda t: mittag_leffler(alpha, t), otypes=[float])(x)

        return mittag_leffler(alpha, x)

    if isinstance(e, Neg):
        return -_real(e.inner, x, alpha)

    if isinstance(e, Add):
        return _real(e.left, x, alpha) + _real(e.right, x, alpha)

    if isinstance(e, Sub):
        return _real(e.left, x, alpha) - _real(e.right, x, alpha)

    if isinstance(e, Mul):
        return _real(e.left, x, alpha) * _real(e.right, x, alpha)

    if isinstance(e, Div):
        return _divide(_real(e.left, x, alpha), _real(e.right, x, alpha), e)

    if isinstance(e, PowAlpha):
        return _alpha_power(_real(e.inner, x, alpha), alpha.times(e.k), e)

    if isinstance(e, PowClassical):
        return _classical_power(_real(e.inner, x, alpha), e.r, e)

    raise TypeError(f"Unknown expression node {type(e).__name__}")


def eval_base(e: Expr, x: Points, alpha: AlphaLike) -> Points:
    """
    Base image of an expression, the classical value whose alpha power is the fractal-mode result.

    Note:
        Plain constants, :code:`x` and classical powers enter as the element with the same displayed value.
        :code:`u^(ka)` enters with base :code:`spow(u, k)`, :code:`c^a` with base :code:`c`.

    Raises:
        FracUnsupportedMode: If the expression contains the Mittag-Leffler atom.
        FracDomainError: As in real mode.
    """

    return _base(e, _as_points(x), Alpha.coerce(alpha))


def _from_display(value: Points, alpha: Alpha) -> Points:
    return spow(value, 1.0 / alpha.value)


def _base(e: Expr, x: Points, alpha: Alpha) -> Points:
    if isinstance(e, ML):
        frac_logger.calc.error("Mittag-Leffler atom in fractal mode")
        raise FracUnsupportedMode("unsupported in fractal mode")

    if isinstance(e, (Const, Var, PowClassical)):
        return _from_display(_real(e, x, alpha), alpha)

    if isinstance(e, ConstAlpha):
        return _like(x, e.base)

    if isinstance(e, PowAlpha):
        return _alpha_power(_real(e.inner, x, alpha), float(e.k), e)

    if isinstance(e, Neg):
        return -_base(e.inner, x, alpha)

    if isinstance(e, Add):
        return _base(e.left, x, alpha) + _base(e.right, x, alpha)

    if isinstance(e, Sub):
        return _base(e.left, x, alpha) - _base(e.right, x, alpha)

    if isinstance(e, Mul):
        return _base(e.left, x, alpha) * _base(e.right, x, alpha)

    if isinstance(e, Div):
        return _divide(_base(e.left, x, alpha), _base(e.right, x, alpha), e)

    raise TypeError(f"Unknown expression node {type(e).__name__}")


def eval_fractal(e: Expr, x: float, alpha: AlphaLike) -> FractalNumber:
    """
    Evaluate with R^a arithmetic.

    Args:
        e: Expression without the Mittag-Leffler atom.
        x: Point.
        alpha: Fractal order.

    Returns:
        :code:`FractalNumber` whose base is the base image at :code:`x`.
    """

    alpha = Alpha.coerce(alpha)
    return FractalNumber(float(eval_base(e, float(x), alpha)), alpha)


def at_alpha_one(e: Expr) -> Expr:
    """Rewrite alpha powers as classical powers, the same function at alpha = 1 on x >= 0."""

    if isinstance(e, ConstAlpha):
        return Const(e.base)

    if isinstance(e, PowAlpha):
        return PowClassical(at_alpha_one(e.inner), e.k)

    if isinstance(e, Neg):
        return Neg(at_alpha_one(e.inner))

    if isinstance(e, (Add, Sub, Mul, Div)):
        return type(e)(at_alpha_one(e.left), at_alpha_one(e.right))

    return e
