"""
Arithmetic on the fractal set R^a.

An element a^a is stored by its base a. Addition and multiplication act on bases,
so a^a + b^a = (a + b)^a and a^a b^a = (ab)^a hold exactly. The displayed value
of a^a is the signed power sign(a) |a|^a, which also gives -(a^a) = (-a)^a.
"""

from typing import Union
from fractions import Fraction
from functools import total_ordering

import numpy as np

from .exc import FracAlphaRange, FracAlphaMismatch, FracZeroDivision, FracDomainError
from .loggers import frac_logger


__all__ = (
    "Alpha",
    "FractalNumber",
    "spow",
    "fract_add",
    "fract_sub",
    "fract_mul",
    "fract_div",
    "fract_neg",
    "fract_pow",
    "fract_cmp",
    "fract_from_value"
)


Real = Union[int, float]
ArrayLike = Union[float, np.ndarray]


def spow(u: ArrayLike, beta: float) -> ArrayLike:
    """
    Signed power :code:`sign(u) |u|^beta`.

    Note:
        :code:`spow(u, 0)` is 1 for every u, as for the ordinary power.

    Args:
        u: Scalar or array.
        beta: Exponent.

    Returns:
        Same shape as :code:`u`.
    """

    if beta == 0:
        return np.ones_like(u, dtype=float) if isinstance(u, np.ndarray) else 1.0

    if beta == 1:
        return u.astype(float) if isinstance(u, np.ndarray) else float(u)

    if isinstance(u, np.ndarray):
        with np.errstate(divide="ignore"):
            return np.sign(u) * np.abs(u) ** beta

    u = float(u)
    if u == 0.0:
        if beta < 0:
            raise FracZeroDivision("0 to a negative power")
        return 0.0

    return abs(u) ** beta if u > 0 else -(abs(u) ** beta)


class Alpha:
    """
    Fractal order, the global parameter of every computation.

    Args:
        value: Order in (0, 1].

    Raises:
        FracAlphaRange: If value is not in (0, 1].
    """

    # Magic methods
    def __init__(self, value: Union[Real, "Alpha"]) -> None:
        value = float(value)

        if not (0.0 < value <= 1.0):
            frac_logger.main.error(f"Alpha {value} is out of (0, 1]")
            raise FracAlphaRange(f"alpha must satisfy 0 < alpha <= 1, got {value}")

        self.__value = value

    def __float__(self) -> float:
        return self.__value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Alpha):
            return self.__value == other.value

        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Alpha", self.__value))

    def __repr__(self) -> str:
        return f"Alpha({self.__value!r})"

    # Getters
    @property
    def value(self) -> float:
        return self.__value

    @property
    def is_classical(self) -> bool:
        return self.__value == 1.0

    # Main methods
    def times(self, k: Union[Fraction, int]) -> float:
        """Return :code:`k * alpha` with :code:`k` kept exact until the final product."""

        k = Fraction(k)
        return k.numerator * self.__value / k.denominator

    # Class methods
    @classmethod
    def coerce(cls, alpha: Union[Real, "Alpha"]) -> "Alpha":
        return alpha if isinstance(alpha, Alpha) else cls(alpha)


@total_ordering
class FractalNumber:
    """
    Element :code:`base^alpha` of R^alpha.

    Args:
        base: The :code:`a` in :code:`a^alpha`.
        alpha: Fractal order.
    """

    # Magic methods
    def __init__(self, base: Real, alpha: Union[Real, Alpha]) -> None:
        self.__base = float(base)
        self.__alpha = Alpha.coerce(alpha)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FractalNumber):
            return self.__alpha == other.alpha and self.__base == other.base

        return NotImplemented

    def __lt__(self, other: "FractalNumber") -> bool:
        return fract_cmp(self, other) < 0

    def __hash__(self) -> int:
        return hash((self.__base, self.__alpha))

    def __repr__(self) -> str:
        return f"FractalNumber(base={self.__base!r}, alpha={self.__alpha.value!r})"

    def __add__(self, other: "FractalNumber") -> "FractalNumber":
        return fract_add(self, other)

    def __sub__(self, other: "FractalNumber") -> "FractalNumber":
        return fract_sub(self, other)

    def __mul__(self, other: "FractalNumber") -> "FractalNumber":
        return fract_mul(self, other)

    def __truediv__(self, other: "FractalNumber") -> "FractalNumber":
        return fract_div(self, other)

    def __neg__(self) -> "FractalNumber":
        return fract_neg(self)

    def __pow__(self, k: Union[Fraction, int]) -> "FractalNumber":
        return fract_pow(self, k)

    def __float__(self) -> float:
        return self.display

    # Getters
    @property
    def base(self) -> float:
        return self.__base

    @property
    def alpha(self) -> Alpha:
        return self.__alpha

    @property
    def display(self) -> float:
        return spow(self.__base, self.__alpha.value)


def _check_alpha(x: FractalNumber, y: FractalNumber) -> Alpha:
    if x.alpha != y.alpha:
        frac_logger.main.error(f"Alpha mismatch: {x.alpha.value} and {y.alpha.value}")
        raise FracAlphaMismatch

    return x.alpha


def fract_add(x: FractalNumber, y: FractalNumber) -> FractalNumber:
    """:code:`a^alpha + b^alpha = (a + b)^alpha`"""

    return FractalNumber(x.base + y.base, _check_alpha(x, y))


def fract_sub(x: FractalNumber, y: FractalNumber) -> FractalNumber:
    return FractalNumber(x.base - y.base, _check_alpha(x, y))


def fract_mul(x: FractalNumber, y: FractalNumber) -> FractalNumber:
    """:code:`a^alpha b^alpha = (ab)^alpha`"""

    return FractalNumber(x.base * y.base, _check_alpha(x, y))


def fract_div(x: FractalNumber, y: FractalNumber) -> FractalNumber:
    """
    Raises:
        FracZeroDivision: If divisor is 0^alpha.
    """

    alpha = _check_alpha(x, y)

    if y.base == 0.0:
        frac_logger.main.error("Division by 0^alpha")
        raise FracZeroDivision("division by 0^alpha")

    return FractalNumber(x.base / y.base, alpha)


def fract_neg(x: FractalNumber) -> FractalNumber:
    return FractalNumber(-x.base, x.alpha)


def fract_pow(x: FractalNumber, k: Union[Fraction, int]) -> FractalNumber:
    """
    Rational power of an element, :code:`(a^alpha)^k = (a^k)^alpha`.

    Note:
        Integer :code:`k` is repeated multiplication, so negative bases are allowed.

    Raises:
        FracDomainError: Negative base to a non-integer power.
        FracZeroDivision: Zero base to a negative power.
    """

    k = Fraction(k)
    base = x.base

    if base == 0.0 and k < 0:
        raise FracZeroDivision("0^alpha to a negative power")

    if k.denominator == 1:
        return FractalNumber(base ** int(k), x.alpha)

    if base < 0.0:
        frac_logger.main.error("Negative base to a non-integer power")
        raise FracDomainError(f"negative base {base} to non-integer power {k}")

    return FractalNumber(base ** (k.numerator / k.denominator), x.alpha)


def fract_cmp(x: FractalNumber, y: FractalNumber) -> int:
    """
    Order of R^alpha. Since :code:`u -> spow(u, alpha)` is strictly increasing,
    the order of bases is the order of displayed values.

    Returns:
        -1, 0 or 1.
    """

    _check_alpha(x, y)
    return (x.base > y.base) - (x.base < y.base)


def fract_from_value(v: Real, alpha: Union[Real, Alpha]) -> FractalNumber:
    """Element whose displayed value is :code:`v`, base :code:`spow(v, 1 / alpha)`."""

    alpha = Alpha.coerce(alpha)
    return FractalNumber(spow(float(v), 1.0 / alpha.value), alpha)
