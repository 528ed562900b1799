from typing import NamedTuple, Optional


__all__ = (
    "MLResult",
    "Witness",
    "SlopeDiag",
    "SlopeChain",
    "TaylorResult",
    "CrossCheck",
    "SweepRow"
)


class MLResult(NamedTuple):
    """NamedTuple of truncated Mittag-Leffler series - value, tail bound and used terms."""

    value: float
    error_bound: float
    terms: int


class Witness(NamedTuple):
    """
    NamedTuple of one checked grid instance. A violation has :code:`lhs > rhs`.
    Lambda and the second point are empty for pointwise checks.
    """

    x1: float
    lam: Optional[float]
    x2: Optional[float]
    lhs: float
    rhs: float


class SlopeDiag(NamedTuple):
    """NamedTuple of both readings of the slope characterization."""

    lhs: float
    rhs: float
    holds: bool
    fractal_lhs: Optional[float]
    fractal_rhs: Optional[float]
    fractal_holds: Optional[bool]


class SlopeChain(NamedTuple):
    """NamedTuple of the three-slope chain s12 <= s13 <= s23, both readings."""

    slopes: tuple[float, float, float]
    holds: bool
    fractal_slopes: Optional[tuple[float, float, float]]
    fractal_holds: Optional[bool]


class TaylorResult(NamedTuple):
    """NamedTuple of generalized Taylor expansion - polynomial, remainder bound and its interval."""

    polynomial: "AlphaPolynomial"  # noqa: F821
    remainder_bound: float
    interval: tuple[float, float]


class CrossCheck(NamedTuple):
    """NamedTuple of verdicts of all convexity characterizations."""

    verdicts: dict[str, str]
    agree: bool


class SweepRow(NamedTuple):
    """NamedTuple of one CSV row of an alpha sweep."""

    alpha: float
    mode: str
    lhs: Optional[float]
    mid: Optional[float]
    rhs: Optional[float]
    margin1: Optional[float]
    margin2: Optional[float]
    satisfied: bool
