from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fractconvex import parse, ExprParser, pretty_print
from fractconvex.expr import Const, ConstAlpha, Var, Add, Sub, Mul, Div, Neg, PowAlpha, PowClassical, ML
from fractconvex.exc import FracSyntaxError, FracExponentError


@pytest.mark.parametrize("text, expected", [
    ("x", Var()),
    ("x^a", PowAlpha(Var(), 1)),
    ("x^(3a)", PowAlpha(Var(), 3)),
    ("x^(3*a)", PowAlpha(Var(), 3)),
    ("x^(-a)", PowAlpha(Var(), -1)),
    ("x^(1/2a)", PowAlpha(Var(), Fraction(1, 2))),
    ("x^2", PowClassical(Var(), 2)),
    ("x^(1/2)", PowClassical(Var(), Fraction(1, 2))),
    ("x^(-2)", PowClassical(Var(), -2)),
    ("2^a", ConstAlpha(2.0)),
    ("2^(3a)", PowAlpha(Const(2.0), 3)),
    ("-2", Const(-2.0)),
    ("-2^a", Neg(ConstAlpha(2.0))),
    ("-x^(2a)", Neg(PowAlpha(Var(), 2))),
    ("E(x^a)", ML()),
    ("E(x^(a))", ML()),
    ("(x+1/x)^(10a)", PowAlpha(Add(Var(), Div(Const(1.0), Var())), 10)),
    ("x - 1 - 2", Sub(Sub(Var(), Const(1.0)), Const(2.0))),
    ("2*x^a/3", Div(Mul(Const(2.0), PowAlpha(Var(), 1)), Const(3.0))),
    ("x*-2", Mul(Var(), Const(-2.0))),
    ("1e-3 + x", Add(Const(0.001), Var())),
])
def test_parse(text, expected):
    assert parse(text) == expected
    assert ExprParser.parse(text) == expected


@pytest.mark.parametrize("text", ["x^0.5", "x^(0.5)", "x^(1/0)", "x^(1.5a)"])
def test_exponent_must_be_rational(text):
    with pytest.raises(FracExponentError):
        parse(text)


@pytest.mark.parametrize("text, offset", [
    ("x +", 3),
    ("x $ 1", 2),
    ("(x", 2),
    ("x)", 1),
    ("E(x)", 3),
    ("x^", 2),
])
def test_syntax_error_offset(text, offset):
    with pytest.raises(FracSyntaxError) as error:
        parse(text)

    assert error.value.offset == offset
    assert error.value.expected


def test_syntax_error_offset_counts_bytes():
    with pytest.raises(FracSyntaxError) as error:
        parse("x + é")

    assert error.value.offset == 4

    with pytest.raises(FracSyntaxError) as error:
        parse("(é)")

    assert error.value.offset == 1


@pytest.mark.parametrize("e, text", [
    (PowAlpha(Var(), 3), "x^(3a)"),
    (PowAlpha(Var(), 1), "x^a"),
    (ConstAlpha(2.0), "2^a"),
    (ConstAlpha(-2.0), "(-2)^a"),
    (Neg(Const(2.0)), "-(2)"),
    (Add(Var(), Const(-2.0)), "x + -2"),
    (Sub(Var(), Sub(Var(), Const(1.0))), "x - (x - 1)"),
    (PowAlpha(Neg(Var()), 2), "(-x)^(2a)"),
    (PowClassical(Var(), Fraction(-1, 2)), "x^(-1/2)"),
    (Mul(Const(0.1), ML()), "0.1*E(x^a)"),
])
def test_pretty_print(e, text):
    assert pretty_print(e) == text
    assert str(e) == text
    assert parse(text) == e


numbers = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
multipliers = st.fractions(min_value=-4, max_value=4, max_denominator=4)

leaves = st.one_of(
    numbers.map(Const),
    numbers.map(ConstAlpha),
    st.just(Var()),
    st.just(ML())
)


def _extend(children):
    return st.one_of(
        st.builds(Add, children, children),
        st.builds(Sub, children, children),
        st.builds(Mul, children, children),
        st.builds(Div, children, children),
        st.builds(Neg, children),
        # c^a is written as the alpha constant
        st.builds(PowAlpha, children, multipliers).filter(lambda e: not (isinstance(e.inner, Const) and e.k == 1)),
        st.builds(PowClassical, children, multipliers)
    )


expressions = st.recursive(leaves, _extend, max_leaves=12)


@given(expressions)
def test_printed_text_parses_back(e):
    assert parse(pretty_print(e)) == e
