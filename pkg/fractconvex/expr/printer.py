"""
Canonical text of expressions.

The printed text parses back to the same AST, so reports can echo any expression.
"""

from fractions import Fraction

from .nodes import Expr, Const, ConstAlpha, Var, Add, Sub, Mul, Div, Neg, PowAlpha, PowClassical, ML


__all__ = (
    "pretty_print",
    "format_number",
    "format_rational"
)


# Print contexts, a node is wrapped in parentheses if it binds weaker than its context
_SUM = 0
_TERM = 1
_FACTOR = 2
_BASE = 3


def format_number(value: float) -> str:
    """Shortest text of a float that parses back to the same value."""

    value = float(value)
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))

    return repr(value)


def format_rational(r: Fraction) -> str:
    return str(Fraction(r))


def pretty_print(e: Expr) -> str:
    """
    Canonical text of an expression.

    Args:
        e: Expression.

    Returns:
        Text in the expression language, :code:`parse(pretty_print(e)) == e`.
    """

    return _print(e, _SUM)


def _wrap(text: str, condition: bool) -> str:
    return f"({text})" if condition else text


def _print(e: Expr, ctx: int) -> str:
    if isinstance(e, Const):
        text = format_number(e.value)
        return _wrap(text, ctx == _BASE and text.startswith("-"))

    if isinstance(e, ConstAlpha):
        base = format_number(e.base)
        base = _wrap(base, base.startswith("-"))
        return _wrap(f"{base}^a", ctx == _BASE)

    if isinstance(e, Var):
        return "x"

    if isinstance(e, ML):
        return "E(x^a)"

    if isinstance(e, (Add, Sub)):
        sign = " + " if isinstance(e, Add) else " - "
        text = _print(e.left, _SUM) + sign + _print(e.right, _TERM)
        return _wrap(text, ctx > _SUM)

    if isinstance(e, (Mul, Div)):
        sign = "*" if isinstance(e, Mul) else "/"
        text = _print(e.left, _TERM) + sign + _print(e.right, _FACTOR)
        return _wrap(text, ctx > _TERM)

    if isinstance(e, Neg):
        inner = e.inner

        # A bare number after the minus would be read back as a negative constant
        if isinstance(inner, Const):
            operand = f"({format_number(inner.value)})"
        elif isinstance(inner, (Add, Sub, Mul, Div)):
            operand = _print(inner, _SUM)
            operand = f"({operand})"
        else:
            operand = _print(inner, _FACTOR)

        return _wrap("-" + operand, ctx == _BASE)

    if isinstance(e, PowAlpha):
        base = _print(e.inner, _BASE)
        exponent = "a" if e.k == 1 else f"({format_rational(e.k)}a)"
        return _wrap(f"{base}^{exponent}", ctx == _BASE)

    if isinstance(e, PowClassical):
        base = _print(e.inner, _BASE)
        r = e.r
        exponent = str(r.numerator) if r.denominator == 1 and r >= 0 else f"({format_rational(r)})"
        return _wrap(f"{base}^{exponent}", ctx == _BASE)

    raise TypeError(f"Unknown expression node {type(e).__name__}")
