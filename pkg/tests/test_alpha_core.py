import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fractconvex import Alpha, FractalNumber, spow, fract_pow, fract_cmp, fract_from_value
from fractconvex.exc import FracAlphaRange, FracAlphaMismatch, FracZeroDivision, FracDomainError

from .conftest import ALPHAS


alphas = st.floats(min_value=0.05, max_value=1.0)
bases = st.one_of(st.just(0.0), st.floats(min_value=1e-6, max_value=1e3), st.floats(min_value=-1e3, max_value=-1e-6))


@pytest.mark.parametrize("value", [0.0, -0.5, 1.0000001, 2.0, float("nan")])
def test_alpha_out_of_range(value):
    with pytest.raises(FracAlphaRange):
        Alpha(value)


def test_alpha_coerce():
    alpha = Alpha(0.5)

    assert Alpha.coerce(alpha) is alpha
    assert Alpha.coerce(1) == Alpha(1.0)
    assert Alpha(1).is_classical
    assert not alpha.is_classical


def test_alpha_times_is_exact():
    assert Alpha(0.3).times(Fraction(10, 3)) == 10 * 0.3 / 3
    assert Alpha(0.5).times(2) == 1.0


def test_spow():
    assert spow(-8.0, 1.0 / 3.0) == pytest.approx(-2.0)
    assert spow(4.0, 0.5) == 2.0
    assert spow(-3.0, 0) == 1.0
    assert spow(0.0, 0.5) == 0.0

    values = spow(np.array([-4.0, 0.0, 9.0]), 0.5)
    assert values.tolist() == [-2.0, 0.0, 3.0]


def test_spow_zero_to_negative_power():
    with pytest.raises(FracZeroDivision):
        spow(0.0, -0.5)


@given(bases, bases, alphas)
def test_addition_acts_on_bases(a, b, alpha):
    total = FractalNumber(a, alpha) + FractalNumber(b, alpha)

    assert total.base == a + b
    assert total == FractalNumber(b, alpha) + FractalNumber(a, alpha)


@given(bases, bases, alphas)
def test_multiplication_acts_on_bases(a, b, alpha):
    product = FractalNumber(a, alpha) * FractalNumber(b, alpha)

    assert product.base == a * b
    assert product.display == pytest.approx(spow(a, alpha) * spow(b, alpha), rel=1e-9, abs=1e-300)


@given(bases, alphas)
def test_negation_is_odd(a, alpha):
    number = FractalNumber(a, alpha)

    assert (-number).display == -number.display
    assert (number - number).base == 0.0


@given(bases, bases, alphas)
def test_order_follows_display(a, b, alpha):
    x, y = FractalNumber(a, alpha), FractalNumber(b, alpha)

    assert (x < y) == (x.display < y.display) or x.display == y.display
    assert fract_cmp(x, y) == (a > b) - (a < b)


@given(st.floats(min_value=-1e3, max_value=1e3), alphas)
def test_from_value_displays_the_value(v, alpha):
    assert fract_from_value(v, alpha).display == pytest.approx(v, rel=1e-9, abs=1e-12)


def test_alpha_mismatch():
    with pytest.raises(FracAlphaMismatch):
        FractalNumber(1.0, 0.5) + FractalNumber(1.0, 0.25)


def test_division():
    assert (FractalNumber(6.0, 0.5) / FractalNumber(3.0, 0.5)).base == 2.0

    with pytest.raises(FracZeroDivision):
        FractalNumber(1.0, 0.5) / FractalNumber(0.0, 0.5)


def test_rational_powers():
    assert fract_pow(FractalNumber(-2.0, 0.5), 3).base == -8.0
    assert fract_pow(FractalNumber(4.0, 0.5), Fraction(1, 2)).base == 2.0
    assert (FractalNumber(2.0, 0.5) ** -1).base == 0.5

    with pytest.raises(FracDomainError):
        fract_pow(FractalNumber(-4.0, 0.5), Fraction(1, 2))

    with pytest.raises(FracZeroDivision):
        fract_pow(FractalNumber(0.0, 0.5), -1)


def test_display_at_alpha_one_is_the_base():
    number = FractalNumber(-2.5, 1.0)

    assert number.display == -2.5
    assert float(number) == -2.5
    assert math.isclose((number * number).display, 6.25)


def test_operations_act_on_bases(rng):
    ops = ("add", "sub", "mul", "div", "neg", "cmp")
    picks = rng.integers(len(ops), size=100_000)
    values = rng.uniform(-1e3, 1e3, size=(100_000, 3))
    orders = rng.choice(ALPHAS, size=100_000)

    for op, (a, b, c), alpha in zip(picks, values.tolist(), orders):
        x, y, z = (FractalNumber(v, float(alpha)) for v in (a, b, c))
        op = ops[op]

        if op == "add":
            assert (x + y).base == a + b
            assert x + y == y + x
            assert ((x + y) + z).base == (a + b) + c
        elif op == "sub":
            assert (x - y).base == a - b
            assert (x - x).base == 0.0
        elif op == "mul":
            assert (x * y).base == a * b
            assert x * y == y * x
            assert (x * (y + z)).base == a * (b + c)
        elif op == "div":
            assert (x / y).base == a / b
        elif op == "neg":
            assert (-x).base == -a
            assert (x + -x).base == 0.0
        else:
            assert fract_cmp(x, y) == (a > b) - (a < b)
            assert (x < y) == (spow(a, float(alpha)) < spow(b, float(alpha)))

        assert (x + FractalNumber(0.0, float(alpha))) == x
        assert (x * FractalNumber(1.0, float(alpha))) == x
