from typing import Callable, Union
from itertools import combinations

import numpy as np

from ..exc import FracDomainError, FracOverflow, FracZeroDivision, FracConfigExc
from ..config import alpha_range_snap
from ..loggers import frac_logger


__all__ = (
    "safe_eval",
    "node_grid",
    "chord_pairs",
    "lambda_grid",
    "alpha_range",
    "violates"
)


Evaluator = Callable[[Union[float, np.ndarray]], Union[float, np.ndarray]]

# Failures of single points, scans skip them
_POINT_ERRORS = (FracDomainError, FracOverflow, FracZeroDivision)


def safe_eval(fn: Evaluator, xs: np.ndarray) -> np.ndarray:
    """
    Evaluate on an array, points outside the domain become NaN.

    Note:
        The whole array is tried first, single points only after a failure.

    Args:
        fn: Vectorized evaluator.
        xs: Points.

    Returns:
        Float array of the same shape.
    """

    xs = np.asarray(xs, dtype=float)

    try:
        values = np.asarray(fn(xs), dtype=float)
        return np.broadcast_to(values, xs.shape).astype(float)

    except _POINT_ERRORS:
        frac_logger.calc.debug("Vector evaluation failed, evaluating point by point")

    values = np.empty_like(xs)
    for index, x in np.ndenumerate(xs):
        try:
            values[index] = float(fn(float(x)))

        except _POINT_ERRORS:
            values[index] = np.nan

    return values


def node_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """:code:`n` equally spaced nodes of :code:`[lo, hi]`, ends included."""

    return np.linspace(float(lo), float(hi), int(n))


def chord_pairs(lo: float, hi: float, n_pairs: int) -> list[tuple[float, float]]:
    """
    Deterministic node pairs of the chord grid.

    Note:
        Takes the smallest node grid with at least :code:`n_pairs` pairs :code:`x1 < x2`
        and picks :code:`n_pairs` of them evenly in lexicographic order.

    Args:
        lo: Left end.
        hi: Right end.
        n_pairs: Number of pairs.

    Returns:
        Pairs in lexicographic grid order.
    """

    n_pairs = max(1, int(n_pairs))

    n_nodes = 2
    while n_nodes * (n_nodes - 1) // 2 < n_pairs:
        n_nodes += 1

    nodes = node_grid(lo, hi, n_nodes)
    pairs = list(combinations(range(n_nodes), 2))

    if len(pairs) > n_pairs:
        picks = np.unique(np.round(np.linspace(0, len(pairs) - 1, n_pairs)).astype(int))
        pairs = [pairs[i] for i in picks]

    return [(float(nodes[i]), float(nodes[j])) for i, j in pairs]


def lambda_grid(n_lambda: int) -> np.ndarray:
    """Lambda values :code:`{0, 1/(n-1), ..., 1}`."""

    return np.linspace(0.0, 1.0, int(n_lambda))


def violates(lhs: Union[float, np.ndarray], rhs: Union[float, np.ndarray], tol: float) -> Union[bool, np.ndarray]:
    """:code:`lhs - rhs > tol max(1, |lhs|, |rhs|)`, the scaled grid tolerance."""

    scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    return (lhs - rhs) > tol * scale


def alpha_range(text: str) -> list[float]:
    """
    Parse :code:`start:stop:step`, a single value is a one-point range.

    Note:
        Stop is included when the last step lands within 1e-12 of it.
        Points are computed as :code:`start + i step` to avoid drift.

    Raises:
        FracConfigExc: If the syntax is wrong or the step is not positive.
    """

    parts = str(text).split(":")

    try:
        numbers = [float(part) for part in parts]

    except ValueError:
        frac_logger.cli.error(f"Bad alpha range '{text}'")
        raise FracConfigExc(f"alpha range must be start:stop:step, got '{text}'") from None

    if len(numbers) == 1:
        return numbers

    if len(numbers) != 3:
        frac_logger.cli.error(f"Bad alpha range '{text}'")
        raise FracConfigExc(f"alpha range must be start:stop:step, got '{text}'")

    start, stop, step = numbers
    if step <= 0 or stop < start:
        frac_logger.cli.error(f"Bad alpha range '{text}'")
        raise FracConfigExc(f"alpha range needs start <= stop and step > 0, got '{text}'")

    values = []
    i = 0
    while True:
        value = start + i * step

        if abs(value - stop) <= alpha_range_snap:
            values.append(stop)
            break

        if value > stop:
            break

        values.append(value)
        i += 1

    return values
