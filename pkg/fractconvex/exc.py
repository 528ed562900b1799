from typing import Optional, Iterable


class FracExc(RuntimeError):
    """Main exception of fractconvex"""
    pass


class FracArgumentExc(FracExc, ValueError):
    """Class of invalid argument exceptions"""
    pass


class FracAlphaRange(FracArgumentExc):
    """Raise if fractal order is not in (0, 1]"""
    pass


class FracWeightsError(FracArgumentExc):
    """Raise if Jensen weights are outside [0, 1] or do not sum to 1"""
    pass


class FracLengthMismatch(FracArgumentExc):
    """Raise if paired data lists have different lengths"""
    pass


class FracPreconditionError(FracArgumentExc):
    """Raise if inputs violate a stated constraint of a check or scenario"""
    pass


class FracConfigExc(FracArgumentExc):
    """Raise if config file or alpha range can not be used"""
    pass


########################################################################################################################


class FracAlgebraExc(FracExc):
    """Class of fractal set arithmetic exceptions"""
    pass


class FracAlphaMismatch(FracAlgebraExc):
    """Raise if two fractal numbers of different order are combined"""

    def __init__(self, message: str = "alpha mismatch") -> None:
        super().__init__(message)


class FracZeroDivision(FracAlgebraExc, ZeroDivisionError):
    """Raise on division by 0^a"""
    pass


class FracDomainError(FracAlgebraExc):
    """
    Raise if a value is outside the natural domain of an operation.

    Args:
        message: Reason.
        subexpr: Text of the offending sub-expression, if any.
    """

    def __init__(self, message: str, subexpr: Optional[str] = None) -> None:
        self.subexpr = subexpr
        super().__init__(message if subexpr is None else f"{message} in '{subexpr}'")


########################################################################################################################


class FracSpecialExc(FracExc):
    """Class of special function exceptions"""
    pass


class FracGammaPole(FracSpecialExc):
    """Raise if gamma function argument is a non-positive integer"""
    pass


class FracOverflow(FracSpecialExc, OverflowError):
    """Raise if a series leaves the floating range or loses its precision"""

    def __init__(self, message: str = "overflow") -> None:
        super().__init__(message)


########################################################################################################################


class FracParseExc(FracExc):
    """Class of expression parsing exceptions"""
    pass


class FracSyntaxError(FracParseExc):
    """
    Raise if expression text does not match the grammar.

    Args:
        message: Reason.
        offset: Byte offset of the offending token.
        expected: Tokens that would have been accepted.
    """

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()) -> None:
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))

        text = f"{message} at offset {offset}"
        if self.expected:
            text += f", expected one of: {', '.join(self.expected)}"

        super().__init__(text)


class FracExponentError(FracParseExc):
    """Raise if an exponent is not an exact rational"""
    pass


########################################################################################################################


class FracEvalExc(FracExc):
    """Class of expression evaluation exceptions"""
    pass


class FracUnsupportedMode(FracEvalExc):
    """Raise if a node has no meaning in the requested evaluation mode"""
    pass


########################################################################################################################


class FracCalcExc(FracExc):
    """Class of local fractional calculus exceptions"""
    pass


class FracNotClassicallyDifferentiable(FracCalcExc):
    """Raise if classical differentiation meets an alpha node"""
    pass


class FracOutOfRuleSet(FracCalcExc):
    """Raise if no symbolic rule applies to an expression"""
    pass


class FracRuleSetExhausted(FracCalcExc):
    """Raise if repeated differentiation leaves the rule set"""
    pass


class FracNotPolynomial(FracCalcExc):
    """Raise if an expression is not an alpha polynomial"""
    pass


class FracAnchorMismatch(FracNotPolynomial):
    """Raise if integrand is not anchored at the lower limit"""

    def __init__(self, message: str = "expression not anchored at lower limit") -> None:
        super().__init__(message)


########################################################################################################################


class FracDBExc(FracExc):
    """Main exception of report archive"""
    pass
