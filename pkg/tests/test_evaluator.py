import math

import numpy as np
import pytest

from fractconvex import parse, eval_real, eval_base, eval_fractal, at_alpha_one, simplify, mittag_leffler
from fractconvex.expr import Const, ConstAlpha, Var, Mul, PowAlpha
from fractconvex.exc import FracDomainError, FracUnsupportedMode


def test_eval_real_scalar():
    e = parse("x^(3a) + 2^a")

    assert eval_real(e, 4.0, 0.5) == pytest.approx(8.0 + math.sqrt(2.0))


def test_eval_real_vectorized():
    e = parse("x^(2a) - 3*x")
    xs = np.linspace(0.0, 2.0, 7)

    values = eval_real(e, xs, 0.5)

    assert values.shape == xs.shape
    assert np.allclose(values, xs - 3.0 * xs)


def test_signed_power_of_negative_points():
    assert eval_real(parse("x^a"), -4.0, 0.5) == -2.0
    assert eval_real(parse("x^(2a)"), -3.0, 0.5) == -3.0


def test_classical_power_of_negative_points():
    assert eval_real(parse("x^2"), -3.0, 0.5) == 9.0

    with pytest.raises(FracDomainError) as error:
        eval_real(parse("x^(1/2)"), -1.0, 0.5)

    assert error.value.subexpr == "x^(1/2)"


def test_division_by_zero_names_the_subexpression():
    with pytest.raises(FracDomainError) as error:
        eval_real(parse("1 + 1/x"), 0.0, 0.5)

    assert error.value.subexpr == "1/x"


def test_mittag_leffler_atom():
    assert eval_real(parse("E(x^a)"), 1.0, 0.5) == pytest.approx(mittag_leffler(0.5, 1.0))
    assert np.allclose(eval_real(parse("E(x^a)"), np.array([0.0, 1.0]), 1.0), [1.0, math.e])


def test_eval_base():
    # 2^a x^a + 3^a has base 2x + 3
    e = parse("2^a*x^a + 3^a")

    assert eval_base(e, 5.0, 0.5) == 13.0
    assert eval_base(parse("x^(2a)"), 3.0, 0.5) == 9.0
    assert eval_base(parse("x"), 4.0, 0.5) == pytest.approx(16.0)


def test_eval_fractal():
    number = eval_fractal(parse("x^(2a)"), 3.0, 0.5)

    assert number.base == 9.0
    assert number.display == 3.0


def test_fractal_mode_rejects_mittag_leffler():
    with pytest.raises(FracUnsupportedMode):
        eval_base(parse("E(x^a) + 1"), 1.0, 0.5)


def test_fractal_and_real_mode_agree_on_alpha_monomials():
    e = parse("x^(3a)")

    for x in (0.5, 1.0, 2.0):
        assert eval_fractal(e, x, 0.5).display == pytest.approx(eval_real(e, x, 0.5))


def test_at_alpha_one():
    e = parse("x^(3a) + 2^a*x^a")
    classical = at_alpha_one(e)
    xs = np.linspace(0.0, 3.0, 13)

    assert classical == parse("x^3 + 2*x^1")
    assert np.allclose(eval_real(classical, xs, 1.0), eval_real(e, xs, 1.0))


@pytest.mark.parametrize("text", [
    "0 + x^(2a)",
    "1*x^a*2",
    "x^(2a) - 0",
    "(x + 1)^(3a)/2",
    "--x",
    "2*3*x",
    "x^a*x^a",
    "E(x^a)*1",
])
@pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0])
def test_simplify_keeps_values(text, alpha):
    e = parse(text)
    xs = np.linspace(0.1, 3.0, 9)

    assert np.allclose(eval_real(simplify(e), xs, alpha), eval_real(e, xs, alpha))
    assert np.allclose(eval_real(simplify(e, alpha), xs, alpha), eval_real(e, xs, alpha))


def test_simplify_powers():
    assert simplify(PowAlpha(Var(), 0)) == Const(1.0)
    assert simplify(PowAlpha(Const(2.0), 1)) == ConstAlpha(2.0)
    assert simplify(PowAlpha(Const(4.0), 1), 0.5) == Const(2.0)
    assert simplify(Mul(Const(1.0), Var())) == Var()
