"""
AST of functions :code:`f : I -> R^a`.

Nodes are frozen dataclasses, so structural equality and hashing come for free and trees
can be shared between threads.
"""

from typing import Union, Iterator
from fractions import Fraction
from dataclasses import dataclass, field


__all__ = (
    "Expr",
    "Const",
    "ConstAlpha",
    "Var",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Neg",
    "PowAlpha",
    "PowClassical",
    "ML",
    "walk",
    "has_alpha",
    "has_var",
    "is_constant"
)


@dataclass(frozen=True)
class Expr:
    """Base class of expression nodes"""

    def __str__(self) -> str:
        from .printer import pretty_print

        return pretty_print(self)

    def children(self) -> tuple["Expr", ...]:
        return ()


@dataclass(frozen=True)
class Const(Expr):
    """Real constant, combined as a plain value"""

    value: float


@dataclass(frozen=True)
class ConstAlpha(Expr):
    """Constant :code:`c^a`, displayed as :code:`spow(c, a)`"""

    base: float


@dataclass(frozen=True)
class Var(Expr):
    """The variable :code:`x`"""


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr

    def children(self) -> tuple[Expr, ...]:
        return self.left, self.right


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr

    def children(self) -> tuple[Expr, ...]:
        return self.left, self.right


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr

    def children(self) -> tuple[Expr, ...]:
        return self.left, self.right


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr

    def children(self) -> tuple[Expr, ...]:
        return self.left, self.right


@dataclass(frozen=True)
class Neg(Expr):
    inner: Expr

    def children(self) -> tuple[Expr, ...]:
        return (self.inner,)


@dataclass(frozen=True)
class PowAlpha(Expr):
    """:code:`spow(inner, k a)` with exact rational :code:`k`"""

    inner: Expr
    k: Fraction = field(default=Fraction(1))

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", Fraction(self.k))

    def children(self) -> tuple[Expr, ...]:
        return (self.inner,)


@dataclass(frozen=True)
class PowClassical(Expr):
    """:code:`inner^r`, free of alpha, with exact rational :code:`r`"""

    inner: Expr
    r: Fraction = field(default=Fraction(1))

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))

    def children(self) -> tuple[Expr, ...]:
        return (self.inner,)


@dataclass(frozen=True)
class ML(Expr):
    """Mittag-Leffler atom :code:`E_a(x^a)`"""


BinaryNode = Union[Add, Sub, Mul, Div]


def walk(e: Expr) -> Iterator[Expr]:
    """Pre-order traversal of all nodes."""

    yield e
    for child in e.children():
        yield from walk(child)


def has_alpha(e: Expr) -> bool:
    """True if any node depends on alpha."""

    return any(isinstance(node, (ConstAlpha, PowAlpha, ML)) for node in walk(e))


def has_var(e: Expr) -> bool:
    """True if the expression depends on :code:`x`."""

    return any(isinstance(node, (Var, ML)) for node in walk(e))


def is_constant(e: Expr) -> bool:
    return not has_var(e)
