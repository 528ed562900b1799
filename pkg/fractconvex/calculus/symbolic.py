"""
Symbolic differentiation.

:code:`classical_diff` differentiates alpha-free structure with the usual rules and gives the
inner derivatives of the chain rule. :code:`alpha_diff` applies the local fractional rule set:
linearity, the product rule, the power rule for :code:`u^(k a)` with alpha-free :code:`u`,
:code:`d^a E_a(x^a) = E_a(x^a)` and :code:`d^a const = 0`.
"""

from typing import Union
from fractions import Fraction

from ..expr import (
    Expr,
    Const,
    ConstAlpha,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowAlpha,
    PowClassical,
    ML,
    has_alpha,
    has_var,
    simplify
)
from ..alpha_core import Alpha
from ..special_fn import gamma_ratio
from ..types import DiffResult
from ..exc import FracNotClassicallyDifferentiable, FracOutOfRuleSet
from ..loggers import frac_logger


__all__ = (
    "classical_diff",
    "alpha_diff",
    "alpha_diff_once"
)


AlphaLike = Union[float, Alpha]


def classical_diff(e: Expr) -> Expr:
    """
    Ordinary derivative :code:`d/dx` of an alpha-free expression.

    Args:
        e: Expression without alpha powers and Mittag-Leffler atoms.

    Returns:
        Simplified derivative.

    Raises:
        FracNotClassicallyDifferentiable: If an alpha power or Mittag-Leffler atom is met.
    """

    return simplify(_classical(e))


def _classical(e: Expr) -> Expr:
    if isinstance(e, (Const, ConstAlpha)):
        return Const(0.0)

    if isinstance(e, Var):
        return Const(1.0)

    if isinstance(e, Neg):
        return Neg(_classical(e.inner))

    if isinstance(e, Add):
        return Add(_classical(e.left), _classical(e.right))

    if isinstance(e, Sub):
        return Sub(_classical(e.left), _classical(e.right))

    if isinstance(e, Mul):
        return Add(Mul(_classical(e.left), e.right), Mul(e.left, _classical(e.right)))

    if isinstance(e, Div):
        square = PowClassical(e.right, Fraction(2))

        if not has_var(e.left):
            return Neg(Div(Mul(e.left, _classical(e.right)), square))

        numerator = Sub(Mul(_classical(e.left), e.right), Mul(e.left, _classical(e.right)))
        return Div(numerator, square)

    if isinstance(e, PowClassical):
        return Mul(Mul(Const(float(e.r)), PowClassical(e.inner, e.r - 1)), _classical(e.inner))

    frac_logger.calc.error(f"'{e}' is not classically differentiable")
    raise FracNotClassicallyDifferentiable(f"'{e}' is not classically differentiable")


def _out_of_rule_set(e: Expr, reason: str) -> None:
    frac_logger.calc.error(f"Out of rule set: {reason} in '{e}'")
    raise FracOutOfRuleSet(f"out of rule set: {reason} in '{e}'")


def _alpha(e: Expr, alpha: Alpha) -> Expr:
    if not has_var(e):
        return Const(0.0)

    if isinstance(e, ML):
        return ML()

    if isinstance(e, Neg):
        return Neg(_alpha(e.inner, alpha))

    if isinstance(e, Add):
        return Add(_alpha(e.left, alpha), _alpha(e.right, alpha))

    if isinstance(e, Sub):
        return Sub(_alpha(e.left, alpha), _alpha(e.right, alpha))

    if isinstance(e, Mul):
        if not has_var(e.left):
            return Mul(e.left, _alpha(e.right, alpha))

        if not has_var(e.right):
            return Mul(_alpha(e.left, alpha), e.right)

        return Add(Mul(_alpha(e.left, alpha), e.right), Mul(e.left, _alpha(e.right, alpha)))

    if isinstance(e, Div):
        if not has_var(e.right):
            return Div(_alpha(e.left, alpha), e.right)

        # Quotients by alpha powers are products with the opposite power
        if isinstance(e.right, PowAlpha):
            return _alpha(Mul(e.left, PowAlpha(e.right.inner, -e.right.k)), alpha)

        _out_of_rule_set(e, "quotient by a non-power")

    if isinstance(e, PowAlpha):
        return _power_rule(e, alpha)

    _out_of_rule_set(e, "classical function of x outside an alpha power")


def _power_rule(e: PowAlpha, alpha: Alpha) -> Expr:
    """:code:`d^a u^(k a) = G(1 + k a) / G(1 + (k - 1) a) u^((k - 1) a) (u')^a`"""

    u = e.inner

    if has_alpha(u):
        _out_of_rule_set(e, "alpha power of an alpha expression")

    try:
        du = classical_diff(u)

    except FracNotClassicallyDifferentiable:
        _out_of_rule_set(e, "inner function is not classically differentiable")

    factor = Const(gamma_ratio(e.k, alpha))
    return Mul(Mul(factor, PowAlpha(u, e.k - 1)), PowAlpha(du, 1))


def alpha_diff_once(e: Expr, alpha: AlphaLike) -> Expr:
    """
    One application of the rule set.

    Raises:
        FracOutOfRuleSet: If no rule applies.
    """

    return simplify(_alpha(e, Alpha.coerce(alpha)))


def alpha_diff(e: Expr, alpha: AlphaLike, order: int = 1) -> DiffResult:
    """
    Local fractional derivative of order :code:`order * alpha`.

    Args:
        e: Expression in the rule set.
        alpha: Fractal order.
        order: Number of applications.

    Returns:
        :code:`DiffResult` with the simplified derivative.

    Raises:
        FracOutOfRuleSet: If an application leaves the rule set.
    """

    alpha = Alpha.coerce(alpha)

    if order < 0:
        raise ValueError("order must be non-negative")

    derivative = e
    for _ in range(order):
        derivative = alpha_diff_once(derivative, alpha)

    frac_logger.calc.info(f"d^({order}a) of '{e}' at alpha={alpha.value} is '{derivative}'")
    return DiffResult(derivative, order, alpha)
