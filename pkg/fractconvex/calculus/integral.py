"""
Local fractional integrals.

The canonical integral is the antiderivative one: :code:`aIb f = F(b)` for the alpha
antiderivative :code:`F` anchored at :code:`a`. The literal Riemann sums diverge over real
intervals, see :code:`diagnostics.riemann_diag`.
"""

import warnings
from typing import Union

from scipy import integrate

from ..expr import Expr, ML, AlphaPolynomial, eval_base
from ..alpha_core import Alpha, FractalNumber
from ..special_fn import gamma_ratio, gamma1p_alpha, mittag_leffler
from ..exc import FracAnchorMismatch
from ..config import quad_tolerance, quad_max_evaluations
from ..loggers import frac_logger


__all__ = (
    "alpha_antiderivative",
    "lfi",
    "lfi_ml",
    "lfi_fractal",
    "lfi_expr"
)


AlphaLike = Union[float, Alpha]

# Gauss-Kronrod rule of quad uses 21 points per subinterval
_QUAD_LIMIT = max(50, quad_max_evaluations // 21)


def alpha_antiderivative(p: AlphaPolynomial, alpha: AlphaLike) -> AlphaPolynomial:
    """
    Term-wise inverse of the power rule.

    Note:
        :code:`c (x - x0)^(k a)` becomes :code:`c G(1 + k a) / G(1 + (k + 1) a) (x - x0)^((k + 1) a)`,
        so the antiderivative vanishes at the anchor.

    Args:
        p: Polynomial with powers :code:`k >= 0`.
        alpha: Fractal order.

    Returns:
        Antiderivative with the same anchor.
    """

    alpha = Alpha.coerce(alpha)

    return AlphaPolynomial(
        p.anchor,
        ((k + 1, coeff / gamma_ratio(k + 1, alpha)) for k, coeff in p.terms)
    )


def lfi(p: AlphaPolynomial, a: float, b: float, alpha: AlphaLike) -> float:
    """
    Local fractional integral :code:`aIb p` of an alpha polynomial.

    Note:
        The polynomial must be anchored at the lower limit :code:`min(a, b)`.
        :code:`aIa = 0` and :code:`aIb = -bIa`.

    Raises:
        FracAnchorMismatch: If the polynomial is anchored elsewhere.
    """

    alpha = Alpha.coerce(alpha)
    a, b = float(a), float(b)

    if a == b:
        return 0.0

    lower, upper = min(a, b), max(a, b)

    if p.anchor != lower:
        frac_logger.calc.error(f"Integrand anchored at {p.anchor}, lower limit is {lower}")
        raise FracAnchorMismatch

    value = float(alpha_antiderivative(p, alpha).evaluate(upper, alpha))
    return value if a < b else -value


def lfi_ml(b: float, alpha: AlphaLike, a: float = 0.0) -> float:
    """
    :code:`0Ib E_a(x^a) = E_a(b^a) - 1`, the series integrated term by term.

    Raises:
        FracAnchorMismatch: If the lower limit is not 0.
    """

    a, b = float(a), float(b)

    if a == b:
        return 0.0

    if min(a, b) != 0.0:
        frac_logger.calc.error("Mittag-Leffler integral needs the lower limit 0")
        raise FracAnchorMismatch

    value = mittag_leffler(alpha, max(a, b)) - 1.0
    return value if a < b else -value


def lfi_expr(e: Expr, a: float, b: float, alpha: AlphaLike) -> float:
    """
    Integral of an expression in real mode.

    Note:
        The expression is recognized as an alpha polynomial anchored at :code:`min(a, b)`,
        the Mittag-Leffler atom alone is integrated from 0.

    Raises:
        FracAnchorMismatch: If the expression is not anchored at the lower limit.
        FracNotPolynomial: If the expression is outside the supported class.
    """

    if isinstance(e, ML):
        return lfi_ml(b, alpha, a)

    lower = min(float(a), float(b))
    return lfi(AlphaPolynomial.from_expr(e, lower, alpha), a, b, alpha)


def lfi_fractal(e: Expr, a: float, b: float, alpha: AlphaLike) -> FractalNumber:
    """
    Fractal-mode integral built from the classical integral of the base image.

    Note:
        The display of :code:`aIb f` is :code:`(int_a^b phi(x) dx)^a / G(1 + a)`, where :code:`phi` is the
        base image of :code:`f`, so the base is linear in the classical integral. It is additive over adjacent intervals and changes sign with the limits.
        Quadrature is scipy :code:`quad` with absolute and relative tolerance 1e-10.

    Returns:
        :code:`FractalNumber`, its display is the integral value.
    """

    alpha = Alpha.coerce(alpha)
    a, b = float(a), float(b)

    if a == b:
        return FractalNumber(0.0, alpha)

    def phi(x: float) -> float:
        return float(eval_base(e, x, alpha))

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)

        value, error = integrate.quad(
            phi, a, b,
            epsabs=quad_tolerance,
            epsrel=quad_tolerance,
            limit=_QUAD_LIMIT
        )

    for warning in caught:
        frac_logger.calc.warning(f"Quadrature of '{e}' on [{a}, {b}]: {warning.message}")

    frac_logger.calc.debug(f"Quadrature of '{e}' on [{a}, {b}]: {value} +- {error}")
    return FractalNumber(value / gamma1p_alpha(1, alpha) ** (1.0 / alpha.value), alpha)
