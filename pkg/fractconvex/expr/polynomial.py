from typing import Union, Iterable
from fractions import Fraction
from collections import defaultdict

import numpy as np

from .nodes import Expr, Const, Var, Add, Sub, Mul, Div, Neg, PowAlpha, PowClassical, has_var
from .evaluator import eval_real
from ..alpha_core import Alpha, spow
from ..special_fn import gamma_ratio
from ..exc import FracNotPolynomial, FracAnchorMismatch
from ..loggers import frac_logger


__all__ = (
    "AlphaPolynomial",
)


Term = tuple[Fraction, float]
AlphaLike = Union[float, Alpha]


class AlphaPolynomial:
    """
    Finite sum :code:`sum c_k (x - anchor)^(k a)` with exact rational :code:`k >= 0`.

    Args:
        anchor: Point :code:`c` of the basis :code:`(x - c)^(k a)`.
        terms: Pairs :code:`(k, coeff)`, equal powers are merged and zero coefficients dropped.

    Raises:
        FracNotPolynomial: If a power is negative or a coefficient is not finite.
    """

    # Magic methods
    def __init__(self, anchor: float, terms: Iterable[tuple[Union[Fraction, int], float]] = ()) -> None:
        merged: dict[Fraction, float] = defaultdict(float)

        for k, coeff in terms:
            k = Fraction(k)
            coeff = float(coeff)

            if k < 0:
                frac_logger.calc.error(f"Negative power {k} in alpha polynomial")
                raise FracNotPolynomial(f"negative power {k}")

            if not np.isfinite(coeff):
                frac_logger.calc.error("Coefficient is not finite")
                raise FracNotPolynomial(f"coefficient {coeff} of power {k} is not finite")

            merged[k] += coeff

        self.__anchor = float(anchor)
        self.__terms: tuple[Term, ...] = tuple(
            (k, coeff) for k, coeff in sorted(merged.items()) if coeff != 0.0
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlphaPolynomial):
            return self.__anchor == other.anchor and self.__terms == other.terms

        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.__anchor, self.__terms))

    def __repr__(self) -> str:
        return f"AlphaPolynomial(anchor={self.__anchor!r}, terms={[(str(k), c) for k, c in self.__terms]})"

    def __str__(self) -> str:
        return str(self.to_expr())

    def __add__(self, other: "AlphaPolynomial") -> "AlphaPolynomial":
        self.__check_anchor(other)
        return AlphaPolynomial(self.__anchor, self.__terms + other.terms)

    def __mul__(self, other: "AlphaPolynomial") -> "AlphaPolynomial":
        self.__check_anchor(other)
        return AlphaPolynomial(
            self.__anchor,
            ((k1 + k2, c1 * c2) for k1, c1 in self.__terms for k2, c2 in other.terms)
        )

    def __neg__(self) -> "AlphaPolynomial":
        return self.scale(-1.0)

    # Getters
    @property
    def anchor(self) -> float:
        return self.__anchor

    @property
    def terms(self) -> tuple[Term, ...]:
        return self.__terms

    @property
    def degree(self) -> Fraction:
        """Largest power multiplier, 0 for the zero polynomial"""

        return self.__terms[-1][0] if self.__terms else Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.__terms

    # Main methods
    def coefficient(self, k: Union[Fraction, int]) -> float:
        return dict(self.__terms).get(Fraction(k), 0.0)

    def scale(self, factor: float) -> "AlphaPolynomial":
        return AlphaPolynomial(self.__anchor, ((k, factor * c) for k, c in self.__terms))

    def evaluate(self, x: Union[float, np.ndarray], alpha: AlphaLike) -> Union[float, np.ndarray]:
        """
        Value :code:`sum c_k spow(x - anchor, k a)`.

        Args:
            x: Point or array of points.
            alpha: Fractal order.
        """

        alpha = Alpha.coerce(alpha)
        shift = np.asarray(x, dtype=float) - self.__anchor if isinstance(x, np.ndarray) else float(x) - self.__anchor

        total = np.zeros_like(shift) if isinstance(shift, np.ndarray) else 0.0
        for k, coeff in self.__terms:
            total = total + coeff * spow(shift, alpha.times(k))

        return total

    def to_expr(self) -> Expr:
        """Expression :code:`c0 + c1*(x - anchor)^a + ...`, zero polynomial gives :code:`0`."""

        if self.__anchor == 0.0:
            shift = Var()
        elif self.__anchor > 0.0:
            shift = Sub(Var(), Const(self.__anchor))
        else:
            shift = Add(Var(), Const(-self.__anchor))

        result = None
        for k, coeff in self.__terms:
            magnitude = abs(coeff)

            if k == 0:
                term = Const(magnitude)
            elif magnitude == 1.0:
                term = PowAlpha(shift, k)
            else:
                term = Mul(Const(magnitude), PowAlpha(shift, k))

            if result is None:
                result = term if coeff > 0 else (Const(coeff) if k == 0 else Neg(term))
            else:
                result = Add(result, term) if coeff > 0 else Sub(result, term)

        return Const(0.0) if result is None else result

    def alpha_derivative(self, alpha: AlphaLike) -> "AlphaPolynomial":
        """
        Term-wise power rule :code:`d^a (x - c)^(k a) = G(1 + k a) / G(1 + (k - 1) a) (x - c)^((k - 1) a)`.

        Raises:
            FracNotPolynomial: If a power in (0, 1) would become negative.
        """

        alpha = Alpha.coerce(alpha)
        terms = []

        for k, coeff in self.__terms:
            if k == 0:
                continue

            if k < 1:
                frac_logger.calc.error(f"Power {k} leaves alpha polynomials after differentiation")
                raise FracNotPolynomial(f"derivative of power {k} is not an alpha polynomial")

            terms.append((k - 1, coeff * gamma_ratio(k, alpha)))

        return AlphaPolynomial(self.__anchor, terms)

    def __check_anchor(self, other: "AlphaPolynomial") -> None:
        if self.__anchor != other.anchor:
            frac_logger.calc.error(f"Anchors {self.__anchor} and {other.anchor} differ")
            raise FracAnchorMismatch(f"anchors {self.__anchor} and {other.anchor} differ")

    # Class methods
    @classmethod
    def constant(cls, anchor: float, value: float) -> "AlphaPolynomial":
        return cls(anchor, [(0, value)])

    @classmethod
    def from_expr(cls, e: Expr, anchor: float, alpha: AlphaLike) -> "AlphaPolynomial":
        """
        Recognize an expression as an alpha polynomial anchored at :code:`anchor`.

        Note:
            Accepts sums, products, integer classical powers and quotients by constants of
            alpha constants and :code:`(x - anchor)^(k a)`. At alpha = 1 plain :code:`x` is accepted too.

        Args:
            e: Expression.
            anchor: Expected anchor.
            alpha: Fractal order, used to value alpha constants.

        Raises:
            FracAnchorMismatch: If the expression is anchored elsewhere.
            FracNotPolynomial: If the expression is not an alpha polynomial.
        """

        return _Recognizer(float(anchor), Alpha.coerce(alpha)).convert(e)


class _Recognizer:
    def __init__(self, anchor: float, alpha: Alpha) -> None:
        self.anchor = anchor
        self.alpha = alpha

    def fail(self, e: Expr) -> None:
        frac_logger.calc.error(f"'{e}' is not an alpha polynomial")
        raise FracNotPolynomial(f"'{e}' is not an alpha polynomial")

    def shift_anchor(self, e: Expr) -> Union[float, None]:
        """Anchor :code:`c` if e is :code:`x`, :code:`x - c` or :code:`x + c`."""

        if isinstance(e, Var):
            return 0.0

        if isinstance(e, Sub) and isinstance(e.left, Var) and isinstance(e.right, Const):
            return e.right.value

        if isinstance(e, Add) and isinstance(e.left, Var) and isinstance(e.right, Const):
            return -e.right.value

        if isinstance(e, Add) and isinstance(e.left, Const) and isinstance(e.right, Var):
            return -e.left.value

        return None

    def convert(self, e: Expr) -> AlphaPolynomial:
        anchor = self.anchor

        if not has_var(e):
            return AlphaPolynomial.constant(anchor, float(eval_real(e, 0.0, self.alpha)))

        if isinstance(e, Var):
            if not self.alpha.is_classical:
                self.fail(e)

            return AlphaPolynomial(anchor, [(1, 1.0), (0, anchor)])

        if isinstance(e, PowAlpha):
            shift = self.shift_anchor(e.inner)

            if shift is None:
                self.fail(e)

            if shift != anchor:
                frac_logger.calc.error(f"'{e}' is anchored at {shift}, not at {anchor}")
                raise FracAnchorMismatch

            if e.k < 0:
                self.fail(e)

            return AlphaPolynomial(anchor, [(e.k, 1.0)])

        if isinstance(e, Neg):
            return -self.convert(e.inner)

        if isinstance(e, Add):
            return self.convert(e.left) + self.convert(e.right)

        if isinstance(e, Sub):
            return self.convert(e.left) + (-self.convert(e.right))

        if isinstance(e, Mul):
            return self.convert(e.left) * self.convert(e.right)

        if isinstance(e, Div):
            if has_var(e.right):
                self.fail(e)

            divisor = self.convert(e.right).coefficient(0)
            if divisor == 0.0:
                self.fail(e)

            return self.convert(e.left).scale(1.0 / divisor)

        if isinstance(e, PowClassical) and e.r.denominator == 1 and e.r >= 0:
            base = self.convert(e.inner)
            result = AlphaPolynomial.constant(anchor, 1.0)

            for _ in range(int(e.r)):
                result = result * base

            return result

        # ML and the rest
        self.fail(e)
