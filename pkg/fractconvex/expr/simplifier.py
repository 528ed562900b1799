"""
Constant folding and light normalization of derivative output.

Integer monomials :code:`c x^p` of classical subexpressions are combined, so that
:code:`d/dx (1 - 1/x^2)` reads :code:`2/x^3`. Alpha powers are never merged with each other.
"""

from typing import Optional, Union
from fractions import Fraction
from functools import reduce

from .nodes import Expr, Const, ConstAlpha, Var, Add, Sub, Mul, Div, Neg, PowAlpha, PowClassical, ML
from ..alpha_core import Alpha, spow


__all__ = (
    "simplify",
)


def simplify(e: Expr, alpha: Optional[Union[float, Alpha]] = None) -> Expr:
    """
    Simplify bottom-up.

    Args:
        e: Expression.
        alpha: If given, alpha constants are folded into plain constants.

    Returns:
        Equivalent expression.
    """

    alpha_value = None if alpha is None else Alpha.coerce(alpha).value
    return _simplify(e, alpha_value)


def _is_const(e: Expr, value: Optional[float] = None) -> bool:
    return isinstance(e, Const) and (value is None or e.value == value)


def _simplify(e: Expr, alpha: Optional[float]) -> Expr:
    if isinstance(e, (Const, Var, ML)):
        return e

    if isinstance(e, ConstAlpha):
        if e.base in (0.0, 1.0):
            return Const(e.base)

        return e if alpha is None else Const(spow(e.base, alpha))

    if isinstance(e, Neg):
        return _negate(_simplify(e.inner, alpha))

    if isinstance(e, Add):
        return _add(_simplify(e.left, alpha), _simplify(e.right, alpha))

    if isinstance(e, Sub):
        return _sub(_simplify(e.left, alpha), _simplify(e.right, alpha))

    if isinstance(e, Mul):
        return _mul(_simplify(e.left, alpha), _simplify(e.right, alpha))

    if isinstance(e, Div):
        return _div(_simplify(e.left, alpha), _simplify(e.right, alpha))

    if isinstance(e, PowAlpha):
        return _pow_alpha(_simplify(e.inner, alpha), e.k, alpha)

    if isinstance(e, PowClassical):
        return _pow_classical(_simplify(e.inner, alpha), e.r)

    raise TypeError(f"Unknown expression node {type(e).__name__}")


def _negate(inner: Expr) -> Expr:
    if isinstance(inner, Const):
        return Const(-inner.value)

    if isinstance(inner, Neg):
        return inner.inner

    if isinstance(inner, Mul):
        constant, factors = _flatten(inner)
        return _product(-constant, factors)

    return Neg(inner)


def _add(left: Expr, right: Expr) -> Expr:
    if _is_const(left) and _is_const(right):
        return Const(left.value + right.value)

    if _is_const(left, 0.0):
        return right

    if _is_const(right, 0.0):
        return left

    if isinstance(right, Neg):
        return _sub(left, right.inner)

    if _is_const(right) and right.value < 0:
        return Sub(left, Const(-right.value))

    if isinstance(left, Neg):
        return _sub(right, left.inner)

    return Add(left, right)


def _sub(left: Expr, right: Expr) -> Expr:
    if _is_const(left) and _is_const(right):
        return Const(left.value - right.value)

    if _is_const(right, 0.0):
        return left

    if _is_const(left, 0.0):
        return _negate(right)

    if isinstance(right, Neg):
        return _add(left, right.inner)

    if _is_const(right) and right.value < 0:
        return Add(left, Const(-right.value))

    return Sub(left, right)


def _monomial(e: Expr) -> Optional[tuple[float, int]]:
    """:code:`(c, p)` if e is :code:`c x^p` with integer p built from Mul, Div and Neg."""

    if isinstance(e, Const):
        return e.value, 0

    if isinstance(e, Var):
        return 1.0, 1

    if isinstance(e, PowClassical) and isinstance(e.inner, Var) and e.r.denominator == 1:
        return 1.0, int(e.r)

    if isinstance(e, Neg):
        inner = _monomial(e.inner)
        return None if inner is None else (-inner[0], inner[1])

    if isinstance(e, (Mul, Div)):
        left = _monomial(e.left)
        right = _monomial(e.right)

        if left is None or right is None:
            return None

        if isinstance(e, Mul):
            return left[0] * right[0], left[1] + right[1]

        if right[0] == 0.0:
            return None

        return left[0] / right[0], left[1] - right[1]

    return None


def _power_of_x(p: int) -> Expr:
    return Var() if p == 1 else PowClassical(Var(), Fraction(p))


def _build_monomial(c: float, p: int) -> Expr:
    if p == 0 or c == 0.0:
        return Const(c)

    if p > 0:
        return _product(c, [_power_of_x(p)])

    quotient = Div(Const(abs(c)), _power_of_x(-p))
    return Neg(quotient) if c < 0 else quotient


def _flatten(e: Expr) -> tuple[float, list[Expr]]:
    """Constant and non-constant factors of a product chain, in order."""

    if isinstance(e, Mul):
        left_const, left_factors = _flatten(e.left)
        right_const, right_factors = _flatten(e.right)
        return left_const * right_const, left_factors + right_factors

    if isinstance(e, Const):
        return e.value, []

    if isinstance(e, Neg):
        constant, factors = _flatten(e.inner)
        return -constant, factors

    return 1.0, [e]


def _scaled(constant: float, e: Expr) -> tuple[float, list[Expr]]:
    inner_constant, factors = _flatten(e)
    return constant * inner_constant, factors


def _product(constant: float, factors: list[Expr]) -> Expr:
    if constant == 0.0 or not factors:
        return Const(constant)

    # Constants are distributed over a single sum
    if len(factors) == 1 and isinstance(factors[0], (Add, Sub)) and constant != 1.0:
        sum_node = factors[0]
        left = _product(*_scaled(constant, sum_node.left))
        right = _product(*_scaled(constant, sum_node.right))
        return _add(left, right) if isinstance(sum_node, Add) else _sub(left, right)

    body = reduce(Mul, factors)
    if constant == 1.0:
        return body

    if constant == -1.0:
        return Neg(body)

    return reduce(Mul, factors, Const(constant))


def _mul(left: Expr, right: Expr) -> Expr:
    if _is_const(left, 0.0) or _is_const(right, 0.0):
        return Const(0.0)

    monomial = _monomial(Mul(left, right))
    if monomial is not None:
        return _build_monomial(*monomial)

    constant, factors = _flatten(Mul(left, right))
    return _product(constant, factors)


def _div(left: Expr, right: Expr) -> Expr:
    if _is_const(right, 1.0):
        return left

    if _is_const(left) and _is_const(right) and right.value != 0.0:
        return Const(left.value / right.value)

    monomial = _monomial(Div(left, right))
    if monomial is not None and monomial[1] != 0:
        return _build_monomial(*monomial)

    if _is_const(left) and left.value < 0:
        return Neg(Div(Const(-left.value), right))

    return Div(left, right)


def _pow_alpha(inner: Expr, k: Fraction, alpha: Optional[float]) -> Expr:
    if k == 0:
        return Const(1.0)

    if _is_const(inner, 1.0):
        return Const(1.0)

    if _is_const(inner, 0.0) and k > 0:
        return Const(0.0)

    if isinstance(inner, Const):
        if alpha is not None:
            return Const(spow(inner.value, float(k) * alpha))

        if k == 1:
            return ConstAlpha(inner.value)

    return PowAlpha(inner, k)


def _pow_classical(inner: Expr, r: Fraction) -> Expr:
    if r == 0:
        return Const(1.0)

    if r == 1:
        return inner

    if isinstance(inner, Const) and r.denominator == 1 and not (inner.value == 0.0 and r < 0):
        return Const(inner.value ** int(r))

    if isinstance(inner, PowClassical) and r.denominator == 1 and inner.r.denominator == 1:
        return _pow_classical(inner.inner, inner.r * r)

    return PowClassical(inner, r)
