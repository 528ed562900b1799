import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from scipy import special

from fractconvex import (
    parse,
    AlphaPolynomial,
    alpha_antiderivative,
    lfi,
    lfi_ml,
    lfi_expr,
    lfi_fractal,
    mittag_leffler
)
from fractconvex.exc import FracAnchorMismatch, FracNotPolynomial

from .conftest import ALPHAS


def test_alpha_monomial():
    # 0I1 x^(3a) = G(1 + 3a) / G(1 + 4a)
    value = lfi_expr(parse("x^(3a)"), 0.0, 1.0, 0.5)

    assert value == pytest.approx(special.gamma(2.5) / special.gamma(3.0))


def test_constant():
    # 0Ib 1 = b^a / G(1 + a)
    assert lfi_expr(parse("1"), 0.0, 4.0, 0.5) == pytest.approx(2.0 / special.gamma(1.5))


def test_antiderivative_vanishes_at_anchor():
    p = AlphaPolynomial(1.0, [(0, 2.0), (2, 1.0)])
    antiderivative = alpha_antiderivative(p, 0.5)

    assert antiderivative.anchor == 1.0
    assert antiderivative.evaluate(1.0, 0.5) == 0.0
    assert antiderivative.alpha_derivative(0.5).coefficient(0) == pytest.approx(2.0)
    assert antiderivative.alpha_derivative(0.5).coefficient(2) == pytest.approx(1.0)


def test_limits():
    p = AlphaPolynomial(0.0, [(2, 1.0)])

    assert lfi(p, 1.0, 1.0, 0.5) == 0.0
    assert lfi(p, 1.0, 0.0, 0.5) == -lfi(p, 0.0, 1.0, 0.5)
    assert lfi_expr(parse("x^(2a)"), 1.0, 0.0, 0.5) == -lfi_expr(parse("x^(2a)"), 0.0, 1.0, 0.5)


def test_anchor_must_be_the_lower_limit():
    with pytest.raises(FracAnchorMismatch):
        lfi(AlphaPolynomial(0.0, [(1, 1.0)]), 1.0, 2.0, 0.5)

    with pytest.raises(FracAnchorMismatch):
        lfi_expr(parse("x^(3a)"), 1.0, 2.0, 0.5)


def test_shifted_integrand():
    assert lfi_expr(parse("(x - 1)^(2a)"), 1.0, 3.0, 1.0) == pytest.approx(8.0 / 3.0)


def test_not_a_polynomial():
    with pytest.raises(FracNotPolynomial):
        lfi_expr(parse("1/x^a"), 0.0, 1.0, 0.5)


def test_mittag_leffler():
    assert lfi_ml(1.0, 1.0) == pytest.approx(math.e - 1.0)
    assert lfi_ml(1.0, 0.5) == pytest.approx(mittag_leffler(0.5, 1.0) - 1.0)
    assert lfi_expr(parse("E(x^a)"), 0.0, 2.0, 0.5) == pytest.approx(mittag_leffler(0.5, 2.0) - 1.0)
    assert lfi_ml(0.0, 0.5, 1.0) == -lfi_ml(1.0, 0.5)

    with pytest.raises(FracAnchorMismatch):
        lfi_ml(2.0, 0.5, a=1.0)


@pytest.mark.parametrize("text, expected", [
    ("x^(2a)", 8.0 / 3.0),
    ("x^(3a) + 1", 4.0 + 2.0),
    ("2^a*x^a", 4.0),
])
def test_alpha_one_is_the_riemann_integral(text, expected):
    assert lfi_expr(parse(text), 0.0, 2.0, 1.0) == pytest.approx(expected)


def test_fractal_integral():
    # Base image of x^a is x, its classical integral over [0, 1] is 1/2
    alpha = 0.5
    number = lfi_fractal(parse("x^a"), 0.0, 1.0, alpha)

    assert number.display == pytest.approx(0.5 ** alpha / special.gamma(1 + alpha), rel=1e-9)
    assert lfi_fractal(parse("x^a"), 1.0, 1.0, alpha).base == 0.0


@given(st.floats(min_value=0.1, max_value=1.0), st.floats(min_value=0.1, max_value=0.9))
def test_fractal_integral_is_additive(alpha, c):
    e = parse("x^(2a) + 3^a")

    whole = lfi_fractal(e, 0.0, 1.0, alpha)
    split = lfi_fractal(e, 0.0, c, alpha) + lfi_fractal(e, c, 1.0, alpha)

    assert split.base == pytest.approx(whole.base, rel=1e-9)
    assert lfi_fractal(e, 1.0, 0.0, alpha).base == pytest.approx(-whole.base, rel=1e-9)


def test_derivative_of_the_antiderivative_on_random_polynomials(rng):
    for _ in range(1000):
        alpha = float(rng.choice(ALPHAS))
        powers = rng.choice(17, size=rng.integers(1, 6), replace=False)
        p = AlphaPolynomial(
            float(rng.uniform(-2.0, 2.0)),
            [(Fraction(int(j), 2), float(rng.uniform(-10.0, 10.0))) for j in powers]
        )

        q = alpha_antiderivative(p, alpha).alpha_derivative(alpha)

        assert q.anchor == p.anchor
        assert [k for k, _ in q.terms] == [k for k, _ in p.terms]
        for (_, expected), (_, coeff) in zip(p.terms, q.terms):
            assert coeff == pytest.approx(expected, rel=1e-12)
