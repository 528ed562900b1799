"""Gamma values for the fractional power rule and the Mittag-Leffler function."""

import math
from typing import Union
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import special

from .alpha_core import Alpha, spow
from .tuples import MLResult
from .exc import FracGammaPole, FracOverflow
from .config import ml_epsilon, ml_ratio_threshold, ml_max_terms, ml_precision
from .loggers import frac_logger


__all__ = (
    "GammaRatio",
    "gamma1p_alpha",
    "gamma_ratio",
    "mittag_leffler",
    "mittag_leffler_series",
    "mittag_leffler_partial_sums"
)


Rational = Union[Fraction, int]
AlphaLike = Union[float, Alpha]


def _gamma_argument(k: Rational, alpha: Alpha) -> float:
    return 1.0 + alpha.times(k)


def _check_pole(argument: float) -> None:
    if argument <= 0 and argument == math.floor(argument):
        frac_logger.calc.error(f"Gamma pole at {argument}")
        raise FracGammaPole(f"gamma has a pole at {argument}")


def gamma1p_alpha(k: Rational, alpha: AlphaLike) -> float:
    """
    Value of :code:`Gamma(1 + k alpha)`.

    Args:
        k: Exact rational multiplier.
        alpha: Fractal order.

    Raises:
        FracGammaPole: If :code:`1 + k alpha` is a non-positive integer.
    """

    argument = _gamma_argument(k, Alpha.coerce(alpha))
    _check_pole(argument)
    return float(special.gamma(argument))


def gamma_ratio(k: Rational, alpha: AlphaLike) -> float:
    """
    Power rule factor :code:`Gamma(1 + k alpha) / Gamma(1 + (k - 1) alpha)`.

    Raises:
        FracGammaPole: If one of the gamma arguments is a pole.
    """

    alpha = Alpha.coerce(alpha)
    k = Fraction(k)

    # G(1 + k) / G(k) = k, also where both arguments are poles
    if alpha.is_classical:
        return k.numerator / k.denominator

    upper = _gamma_argument(k, alpha)
    lower = _gamma_argument(k - 1, alpha)
    _check_pole(upper)
    _check_pole(lower)

    numerator = special.gamma(upper)
    denominator = special.gamma(lower)

    if np.isfinite(numerator) and np.isfinite(denominator):
        return float(numerator / denominator)

    # Both gammas overflow for large k
    sign = special.gammasgn(upper) * special.gammasgn(lower)
    return float(sign * np.exp(special.gammaln(upper) - special.gammaln(lower)))


class GammaRatio:
    """
    Power rule factor of :code:`d^a x^(ka) / dx^a` as a value object.

    Args:
        k: Exact rational exponent multiplier.
        alpha: Fractal order.
    """

    # Magic methods
    def __init__(self, k: Rational, alpha: AlphaLike) -> None:
        self.__k = Fraction(k)
        self.__alpha = Alpha.coerce(alpha)
        self.__value = gamma_ratio(self.__k, self.__alpha)

    def __float__(self) -> float:
        return self.__value

    def __repr__(self) -> str:
        return f"GammaRatio(k={self.__k}, alpha={self.__alpha.value!r}, value={self.__value!r})"

    # Getters
    @property
    def k(self) -> Fraction:
        return self.__k

    @property
    def alpha(self) -> Alpha:
        return self.__alpha

    @property
    def value(self) -> float:
        return self.__value


@lru_cache(maxsize=64)
def _log_gamma_table(alpha_value: float, size: int) -> np.ndarray:
    """:code:`log Gamma(1 + k alpha)` for k < size"""

    return special.gammaln(1.0 + alpha_value * np.arange(size))


def mittag_leffler_series(alpha: AlphaLike, x: float) -> MLResult:
    """
    Sum :code:`E_a(x^a) = sum_k (x^a)^k / Gamma(1 + k a)` with an error bound.

    Note:
        Truncated at the first term whose ratio to the previous one is below 1/2 and whose size
        is below :code:`eps |partial sum|`. The tail after it is bounded by a geometric series,
        the rounding of the sum by :code:`k eps max|term|`. For negative arguments and alpha < 1
        the terms alternate and grow far beyond the sum, so large |x| loses every digit.
        For alpha = 1 the exponential is returned directly.

    Args:
        alpha: Fractal order.
        x: Real argument, negative values use the signed power.

    Returns:
        :code:`MLResult` - value, error bound and number of terms.

    Raises:
        FracOverflow: If partial sums leave the floating range or rounding swamps the value.
    """

    alpha = Alpha.coerce(alpha)
    x = float(x)

    if x == 0.0:
        return MLResult(1.0, 0.0, 1)

    if alpha.is_classical:
        try:
            value = math.exp(x)

        except OverflowError:
            frac_logger.calc.error("Mittag-Leffler overflow")
            raise FracOverflow from None

        return MLResult(value, abs(value) * np.finfo(float).eps, 0)

    z = spow(x, alpha.value)
    log_z = math.log(abs(z))
    negative = z < 0

    size = 256
    table = _log_gamma_table(alpha.value, size)

    total = 1.0
    previous = 1.0
    largest = 1.0

    for k in range(1, ml_max_terms):
        if k >= size:
            size *= 2
            table = _log_gamma_table(alpha.value, size)

        log_term = k * log_z - table[k]
        if log_term > 709.0:
            frac_logger.calc.error("Mittag-Leffler overflow")
            raise FracOverflow

        term = math.exp(log_term)
        if negative and k % 2 == 1:
            term = -term

        total += term
        largest = max(largest, abs(term))
        if not math.isfinite(total):
            frac_logger.calc.error("Mittag-Leffler overflow")
            raise FracOverflow

        ratio = abs(term / previous)
        previous = term

        if ratio < ml_ratio_threshold and abs(term) < ml_epsilon * abs(total):
            rounding = (k + 1) * np.finfo(float).eps * largest
            if rounding > ml_precision * abs(total):
                frac_logger.calc.error(f"Mittag-Leffler series lost precision: terms up to {largest:.3g}, sum {total:.3g}")
                raise FracOverflow("loss of precision")

            bound = abs(term) * ratio / (1.0 - ratio) + rounding
            return MLResult(total, bound, k + 1)

    frac_logger.calc.error(f"Mittag-Leffler series did not converge in {ml_max_terms} terms")
    raise FracOverflow(f"series did not converge in {ml_max_terms} terms")


def mittag_leffler(alpha: AlphaLike, x: float) -> float:
    """Value of :code:`E_a(x^a)`, see :code:`mittag_leffler_series`."""

    return mittag_leffler_series(alpha, x).value


def mittag_leffler_partial_sums(alpha: AlphaLike, x: float, n: int) -> np.ndarray:
    """
    Partial sums :code:`S_0, ..., S_n` of the Mittag-Leffler series.

    Args:
        alpha: Fractal order.
        x: Real argument.
        n: Last term index.

    Returns:
        Array of length :code:`n + 1`.
    """

    alpha = Alpha.coerce(alpha)
    z = spow(float(x), alpha.value)
    k = np.arange(n + 1)

    terms = np.array([z ** int(i) for i in k], dtype=float) * np.exp(-_log_gamma_table(alpha.value, n + 1))
    return np.cumsum(terms)
