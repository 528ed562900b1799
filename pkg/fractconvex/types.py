from typing import Union, Optional, Any

from .expr import Expr, eval_real
from .alpha_core import Alpha
from .tuples import Witness
from .params import FPModes, FPVerdicts
from .utils import json_number
from .config import max_witnesses, default_tolerance


__all__ = (
    "ConvexityReport",
    "InequalityReport",
    "DiffResult",
    "QuadratureDiag",
    "report_keys"
)


# Exact keys of every serialized report, absent values are null
report_keys = ("check", "alpha", "mode", "lhs", "mid", "rhs", "margins", "satisfied", "tolerance", "witnesses", "grid")


def _witness_dict(witness: Witness) -> dict[str, Optional[float]]:
    return {key: json_number(value) for key, value in witness._asdict().items()}


class ConvexityReport:
    """
    Verdict of one convexity characterization on a sampling grid.

    Note:
        :code:`convex` means no violation was found at the grid resolution.

    Args:
        method: Characterization, one of :code:`FPConvexityMethods`.
        verdict: One of :code:`FPVerdicts`.
        mode: One of :code:`FPModes`.
        alpha: Fractal order.
        witnesses: Violating instances in grid order, with :code:`lhs > rhs`.
        grid: Sampling description.
        tolerance: Tolerance of the verdict.
        concave: True if the reversed inequality also held on the grid.
        worst_margin: Smallest :code:`rhs - lhs` over the grid.
        reason: Why the verdict is inconclusive, if it is.
        expr: Text of the checked expression.
    """

    # Magic methods
    def __init__(
            self,
            method: str,
            verdict: str,
            mode: str,
            alpha: Union[float, Alpha],
            witnesses: Optional[list[Witness]] = None,
            grid: Optional[dict[str, Any]] = None,
            tolerance: float = default_tolerance,
            concave: bool = False,
            worst_margin: Optional[float] = None,
            reason: Optional[str] = None,
            expr: Optional[str] = None
    ) -> None:

        if verdict not in FPVerdicts.all:
            raise ValueError(f"Unknown verdict '{verdict}'")

        self.__method = method
        self.__verdict = verdict
        self.__mode = mode
        self.__alpha = Alpha.coerce(alpha)
        self.__witnesses = list(witnesses or [])[:max_witnesses]
        self.__grid = dict(grid or {})
        self.__tolerance = float(tolerance)
        self.__concave = bool(concave)
        self.__worst_margin = worst_margin
        self.__reason = reason
        self.__expr = expr

    def __repr__(self) -> str:
        return f"ConvexityReport(method={self.__method!r}, verdict={self.__verdict!r}, mode={self.__mode!r})"

    def __str__(self) -> str:
        return self.compile()

    # Getters
    @property
    def method(self) -> str:
        return self.__method

    @property
    def verdict(self) -> str:
        return self.__verdict

    @property
    def mode(self) -> str:
        return self.__mode

    @property
    def alpha(self) -> Alpha:
        return self.__alpha

    @property
    def witnesses(self) -> list[Witness]:
        return self.__witnesses

    @property
    def grid(self) -> dict[str, Any]:
        return self.__grid

    @property
    def tolerance(self) -> float:
        return self.__tolerance

    @property
    def concave(self) -> bool:
        return self.__concave

    @property
    def worst_margin(self) -> Optional[float]:
        return self.__worst_margin

    @property
    def reason(self) -> Optional[str]:
        return self.__reason

    @property
    def expr(self) -> Optional[str]:
        return self.__expr

    @property
    def is_convex(self) -> bool:
        return self.__verdict in FPVerdicts.positive

    # Main methods
    def to_dict(self) -> dict[str, Any]:
        """Report in the common JSON schema, the verdict lives in :code:`grid`."""

        grid = dict(self.__grid)
        grid.update(
            method=self.__method,
            verdict=self.__verdict,
            concave=self.__concave,
            reason=self.__reason,
            expr=self.__expr
        )

        return {
            "check": f"convexity.{self.__method}",
            "alpha": self.__alpha.value,
            "mode": self.__mode,
            "lhs": None,
            "mid": None,
            "rhs": None,
            "margins": [] if self.__worst_margin is None else [json_number(self.__worst_margin)],
            "satisfied": self.is_convex,
            "tolerance": self.__tolerance,
            "witnesses": [_witness_dict(witness) for witness in self.__witnesses],
            "grid": grid
        }

    def compile(self) -> str:
        """Human readable text."""

        lines = [
            f"{self.__method} check of {self.__expr or 'f'} at alpha={self.__alpha.value!r} ({self.__mode} mode)",
            f"verdict: {self.__verdict}" + (" (also concave)" if self.__concave and self.is_convex else ""),
        ]

        if self.__reason:
            lines.append(f"reason: {self.__reason}")

        for witness in self.__witnesses:
            lines.append(
                f"witness: x1={witness.x1!r} lambda={witness.lam!r} x2={witness.x2!r} "
                f"lhs={witness.lhs!r} rhs={witness.rhs!r}"
            )

        return "\n".join(lines)


class InequalityReport:
    """
    Result of an inequality verification :code:`lhs <= mid <= rhs`.

    Note:
        Satisfied iff every margin is at least :code:`-tolerance`.

    Args:
        check: Name of the check.
        alpha: Fractal order.
        mode: One of :code:`FPModes`.
        lhs: Left side.
        rhs: Right side.
        mid: Middle term of a double inequality.
        margins: :code:`rhs - lhs`, or :code:`mid - lhs` and :code:`rhs - mid`.
        tolerance: Absolute tolerance on margins.
        witnesses: Instances or extra values of the check.
        grid: Inputs and extra findings.
    """

    # Magic methods
    def __init__(
            self,
            check: str,
            alpha: Union[float, Alpha],
            mode: str,
            lhs: float,
            rhs: float,
            mid: Optional[float] = None,
            margins: Optional[list[float]] = None,
            tolerance: float = default_tolerance,
            witnesses: Optional[list[Any]] = None,
            grid: Optional[dict[str, Any]] = None
    ) -> None:

        if mode not in FPModes.all:
            raise ValueError(f"Unknown mode '{mode}'")

        self.__check = check
        self.__alpha = Alpha.coerce(alpha)
        self.__mode = mode
        self.__lhs = float(lhs)
        self.__mid = None if mid is None else float(mid)
        self.__rhs = float(rhs)

        if margins is None:
            margins = [self.__rhs - self.__lhs] if mid is None else [self.__mid - self.__lhs, self.__rhs - self.__mid]

        self.__margins = [float(margin) for margin in margins]
        self.__tolerance = float(tolerance)
        self.__witnesses = list(witnesses or [])
        self.__grid = dict(grid or {})

    def __repr__(self) -> str:
        return (
            f"InequalityReport(check={self.__check!r}, lhs={self.__lhs!r}, mid={self.__mid!r}, "
            f"rhs={self.__rhs!r}, satisfied={self.satisfied})"
        )

    def __str__(self) -> str:
        return self.compile()

    # Getters
    @property
    def check(self) -> str:
        return self.__check

    @property
    def alpha(self) -> Alpha:
        return self.__alpha

    @property
    def mode(self) -> str:
        return self.__mode

    @property
    def lhs(self) -> float:
        return self.__lhs

    @property
    def mid(self) -> Optional[float]:
        return self.__mid

    @property
    def rhs(self) -> float:
        return self.__rhs

    @property
    def margins(self) -> list[float]:
        return self.__margins

    @property
    def tolerance(self) -> float:
        return self.__tolerance

    @property
    def witnesses(self) -> list[Any]:
        return self.__witnesses

    @property
    def grid(self) -> dict[str, Any]:
        return self.__grid

    @property
    def satisfied(self) -> bool:
        return all(margin >= -self.__tolerance for margin in self.__margins)

    # Main methods
    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.__check,
            "alpha": self.__alpha.value,
            "mode": self.__mode,
            "lhs": json_number(self.__lhs),
            "mid": json_number(self.__mid),
            "rhs": json_number(self.__rhs),
            "margins": [json_number(margin) for margin in self.__margins],
            "satisfied": self.satisfied,
            "tolerance": self.__tolerance,
            "witnesses": [
                _witness_dict(witness) if isinstance(witness, Witness) else witness for witness in self.__witnesses
            ],
            "grid": self.__grid
        }

    def compile(self) -> str:
        """Human readable text."""

        sides = [repr(self.__lhs)] + ([] if self.__mid is None else [repr(self.__mid)]) + [repr(self.__rhs)]

        return "\n".join([
            f"{self.__check} at alpha={self.__alpha.value!r} ({self.__mode} mode)",
            " <= ".join(sides),
            f"margins: {', '.join(repr(margin) for margin in self.__margins)}",
            f"satisfied: {str(self.satisfied).lower()} (tolerance {self.__tolerance!r})"
        ])


class DiffResult:
    """
    Local fractional derivative of order :code:`order * alpha`.

    Args:
        derivative: Derivative expression.
        order: How many times the rule set was applied.
        alpha: Fractal order.
    """

    # Magic methods
    def __init__(self, derivative: Expr, order: int, alpha: Union[float, Alpha]) -> None:
        self.__derivative = derivative
        self.__order = int(order)
        self.__alpha = Alpha.coerce(alpha)

    def __repr__(self) -> str:
        return f"DiffResult(derivative='{self.__derivative}', order={self.__order}, alpha={self.__alpha.value!r})"

    def __str__(self) -> str:
        return str(self.__derivative)

    # Getters
    @property
    def derivative(self) -> Expr:
        return self.__derivative

    @property
    def order(self) -> int:
        return self.__order

    @property
    def alpha(self) -> Alpha:
        return self.__alpha

    # Main methods
    def value(self, x):
        """Real-mode value of the derivative at a point or array of points."""

        return eval_real(self.__derivative, x, self.__alpha)

    def to_dict(self, at: Optional[float] = None) -> dict[str, Any]:
        return {
            "derivative": str(self.__derivative),
            "order": self.__order,
            "alpha": self.__alpha.value,
            "at": at,
            "value": None if at is None else json_number(self.value(at))
        }


class QuadratureDiag:
    """
    Literal uniform Riemann sums of the local fractional integral and their growth.

    Args:
        ns: Partition counts.
        sums: Sums :code:`(1 / G(1 + a)) sum f(t_j) (dt)^a`, one per count.
        growth_exponent: Fitted slope of :code:`log |sum|` against :code:`log N`.
        alpha: Fractal order.
        interval: Integration interval.
    """

    # Magic methods
    def __init__(
            self,
            ns: list[int],
            sums: list[float],
            growth_exponent: float,
            alpha: Union[float, Alpha],
            interval: tuple[float, float]
    ) -> None:

        self.__ns = [int(n) for n in ns]
        self.__sums = [float(s) for s in sums]
        self.__growth_exponent = float(growth_exponent)
        self.__alpha = Alpha.coerce(alpha)
        self.__interval = (float(interval[0]), float(interval[1]))

    def __repr__(self) -> str:
        return f"QuadratureDiag(ns={self.__ns}, growth_exponent={self.__growth_exponent!r})"

    # Getters
    @property
    def ns(self) -> list[int]:
        return self.__ns

    @property
    def sums(self) -> list[float]:
        return self.__sums

    @property
    def growth_exponent(self) -> float:
        return self.__growth_exponent

    @property
    def alpha(self) -> Alpha:
        return self.__alpha

    @property
    def interval(self) -> tuple[float, float]:
        return self.__interval

    # Main methods
    def to_dict(self) -> dict[str, Any]:
        return {
            "ns": self.__ns,
            "sums": [json_number(s) for s in self.__sums],
            "growth_exponent": json_number(self.__growth_exponent),
            "alpha": self.__alpha.value,
            "interval": list(self.__interval)
        }
