import re
from typing import NamedTuple
from fractions import Fraction

from ..expr.nodes import Expr, Const, ConstAlpha, Var, Add, Sub, Mul, Div, Neg, PowAlpha, PowClassical, ML
from ..exc import FracSyntaxError, FracExponentError
from ..loggers import frac_logger


__all__ = (
    "ExprParser",
    "parse"
)


class _Token(NamedTuple):
    kind: str
    text: str
    offset: int  # Byte offset in UTF-8 text


# Order matters, numbers before names
_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    |(?P<x>x)
    |(?P<a>a)
    |(?P<E>E)
    |(?P<op>[-+*/^()])
    """,
    re.VERBOSE
)

_ATOM_START = ("number", "x", "E", "(", "-")
_EXPONENT_START = ("(", "a", "integer")
_INTEGER_RE = re.compile(r"\d+")


class ExprParser:
    """
    Recursive descent parser of the expression language.

    Note:
        expr := term (("+"|"-") term)*\n
        term := factor (("*"|"/") factor)*\n
        factor := atom ("^" ("(" exponent ")" | "a" | integer))?\n
        atom := number | "x" | "(" expr ")" | "E" "(" "x" "^" ("a" | "(" "a" ")") ")" | "-" factor\n
        exponent := ["-"] rational ["*"] "a" | ["-"] "a" | ["-"] rational\n
        rational := integer ("/" integer)?

    Args:
        text: Expression text.
    """

    # Magic methods
    def __init__(self, text: str) -> None:
        self.__text = text
        self.__tokens = self.__tokenize(text)
        self.__position = 0

    # Getters
    @property
    def text(self) -> str:
        return self.__text

    # Class methods
    @classmethod
    def parse(cls, text: str) -> Expr:
        """
        Parse expression text.

        Args:
            text: Text in the expression language, :code:`a` stands for the fractal order.

        Returns:
            Expression AST.

        Raises:
            FracSyntaxError: If text does not match the grammar, with offset and expected tokens.
            FracExponentError: If an exponent is not an exact rational.
        """

        parser = cls(text)
        e = parser.__expr()

        token = parser.__peek()
        if token.kind != "end":
            parser.__error(f"Unexpected '{token.text}'", ("+", "-", "*", "/", "end"))

        frac_logger.calc.debug(f"Parsed '{text}'")
        return e

    # Main methods
    @staticmethod
    def __tokenize(text: str) -> list[_Token]:
        tokens: list[_Token] = []
        position = 0

        while position < len(text):
            match = _TOKEN_RE.match(text, position)
            offset = len(text[:position].encode("UTF-8"))

            if match is None:
                frac_logger.calc.error(f"Unknown character at offset {offset}")
                raise FracSyntaxError(f"Unknown character '{text[position]}'", offset, _ATOM_START)

            kind = match.lastgroup
            if kind == "op":
                kind = match.group()

            if kind != "space":
                tokens.append(_Token(kind, match.group(), offset))

            position = match.end()

        tokens.append(_Token("end", "end of text", len(text.encode("UTF-8"))))
        return tokens

    def __peek(self, ahead: int = 0) -> _Token:
        index = min(self.__position + ahead, len(self.__tokens) - 1)
        return self.__tokens[index]

    def __next(self) -> _Token:
        token = self.__peek()
        self.__position += 1
        return token

    def __error(self, message: str, expected: tuple[str, ...]) -> None:
        token = self.__peek()
        frac_logger.calc.error(f"Syntax error at offset {token.offset} in '{self.__text}'")
        raise FracSyntaxError(message, token.offset, expected)

    def __expect(self, kind: str) -> _Token:
        token = self.__peek()
        if token.kind != kind:
            self.__error(f"Unexpected '{token.text}'", (kind,))

        return self.__next()

    def __expr(self) -> Expr:
        e = self.__term()

        while self.__peek().kind in ("+", "-"):
            op = self.__next().kind
            right = self.__term()
            e = Add(e, right) if op == "+" else Sub(e, right)

        return e

    def __term(self) -> Expr:
        e = self.__factor()

        while self.__peek().kind in ("*", "/"):
            op = self.__next().kind
            right = self.__factor()
            e = Mul(e, right) if op == "*" else Div(e, right)

        return e

    def __factor(self) -> Expr:
        atom = self.__atom()

        if self.__peek().kind != "^":
            return atom

        self.__next()
        token = self.__peek()

        if token.kind == "a":
            self.__next()
            return self.__alpha_power(atom, Fraction(1))

        if token.kind == "number":
            if not _INTEGER_RE.fullmatch(token.text):
                frac_logger.calc.error(f"Exponent '{token.text}' is not rational")
                raise FracExponentError(f"exponent '{token.text}' is not an exact rational")

            self.__next()
            return PowClassical(atom, Fraction(int(token.text)))

        if token.kind != "(":
            self.__error(f"Unexpected '{token.text}' after '^'", _EXPONENT_START)

        self.__next()
        k, is_alpha = self.__exponent()
        self.__expect(")")

        return self.__alpha_power(atom, k) if is_alpha else PowClassical(atom, k)

    @staticmethod
    def __alpha_power(atom: Expr, k: Fraction) -> Expr:
        # number^a is an alpha constant
        if isinstance(atom, Const) and k == 1:
            return ConstAlpha(atom.value)

        return PowAlpha(atom, k)

    def __exponent(self) -> tuple[Fraction, bool]:
        """
        Returns:
            Exact multiplier and true if it multiplies alpha.
        """

        sign = 1
        if self.__peek().kind == "-":
            self.__next()
            sign = -1

        if self.__peek().kind == "a":
            self.__next()
            return Fraction(sign), True

        k = self.__rational()

        if self.__peek().kind == "*":
            self.__next()
            self.__expect("a")
            return sign * k, True

        if self.__peek().kind == "a":
            self.__next()
            return sign * k, True

        return sign * k, False

    def __rational(self) -> Fraction:
        numerator = self.__integer()

        if self.__peek().kind != "/":
            return Fraction(numerator)

        self.__next()
        denominator = self.__integer()

        if denominator == 0:
            frac_logger.calc.error("Zero denominator in exponent")
            raise FracExponentError("exponent has zero denominator")

        return Fraction(numerator, denominator)

    def __integer(self) -> int:
        token = self.__peek()

        if token.kind != "number":
            self.__error(f"Unexpected '{token.text}' in exponent", ("integer", "a"))

        if not _INTEGER_RE.fullmatch(token.text):
            frac_logger.calc.error(f"Exponent '{token.text}' is not rational")
            raise FracExponentError(f"exponent '{token.text}' is not an exact rational")

        self.__next()
        return int(token.text)

    def __atom(self) -> Expr:
        token = self.__peek()

        if token.kind == "number":
            self.__next()
            return Const(float(token.text))

        if token.kind == "x":
            self.__next()
            return Var()

        if token.kind == "(":
            self.__next()
            e = self.__expr()
            self.__expect(")")
            return e

        if token.kind == "E":
            return self.__mittag_leffler()

        if token.kind == "-":
            self.__next()

            # -2 is a negative constant, -2^a is the negation of 2^a
            following = self.__peek()
            if following.kind == "number" and self.__peek(1).kind != "^":
                self.__next()
                return Const(-float(following.text))

            return Neg(self.__factor())

        self.__error(f"Unexpected '{token.text}'", _ATOM_START)

    def __mittag_leffler(self) -> Expr:
        self.__expect("E")
        self.__expect("(")
        self.__expect("x")
        self.__expect("^")

        if self.__peek().kind == "(":
            self.__next()
            self.__expect("a")
            self.__expect(")")
        else:
            self.__expect("a")

        self.__expect(")")
        return ML()


def parse(text: str) -> Expr:
    """Shortcut of :code:`ExprParser.parse`."""

    return ExprParser.parse(text)
