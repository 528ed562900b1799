import logging
import math

import numpy as np
import pytest

from fractconvex import (
    parse,
    chord_check,
    slope_diag,
    slope_chain_diag,
    grad_monotone_check,
    support_line_check,
    second_deriv_check,
    convexity_reports,
    cross_check,
    jensen,
    eval_base,
    frac_logger,
    CONVEXITY,
    FPVerdicts,
    FPModes
)
from fractconvex.exc import FracPreconditionError
from fractconvex.utils import chord_pairs, lambda_grid, violates

from .conftest import ALPHAS, random_polynomial


def test_alpha_power_is_convex():
    report = chord_check(parse("x^(3a)"), (0.0, 2.0), 0.5)

    assert report.verdict == FPVerdicts.convex
    assert report.is_convex
    assert not report.concave
    assert report.witnesses == []
    assert report.worst_margin >= 0.0


def test_negative_alpha_power_is_not_convex():
    report = chord_check(parse("-x^(2a)"), (0.0, 2.0), 0.5)

    assert report.verdict == FPVerdicts.nonconvex
    assert 0 < len(report.witnesses) <= 10
    assert all(witness.lhs > witness.rhs for witness in report.witnesses)
    assert all(0.0 < witness.lam < 1.0 for witness in report.witnesses)


def test_fractal_mode_compares_bases():
    # Base image 2x + 3 is linear, hence convex and concave at once
    e = parse("2^a*x^a + 3^a")

    report = chord_check(e, (0.0, 2.0), 0.5, FPModes.fractal)

    assert report.verdict == FPVerdicts.convex
    assert report.concave
    assert report.grid["values"] == "base"


def test_strict_check_reports_ties():
    report = chord_check(parse("2^a*x^a + 3^a"), (0.0, 2.0), 0.5, FPModes.fractal, strict=True)

    assert report.verdict == FPVerdicts.inconclusive
    assert "ties" in report.reason


def test_strictly_convex():
    report = chord_check(parse("x^(3a)"), (0.5, 2.0), 1.0, strict=True)

    assert report.verdict == FPVerdicts.strictly_convex


def test_points_outside_the_domain():
    report = chord_check(parse("-(x^(1/2))"), (-1.0, 1.0), 1.0)

    assert report.verdict == FPVerdicts.inconclusive
    assert "outside the domain" in report.reason


def test_fractal_mode_of_mittag_leffler_is_inconclusive():
    report = chord_check(parse("E(x^a)"), (0.0, 1.0), 0.5, FPModes.fractal)

    assert report.verdict == FPVerdicts.inconclusive
    assert report.reason


@pytest.mark.parametrize("interval", [(1.0, 1.0), (2.0, 1.0)])
def test_empty_interval(interval):
    with pytest.raises(FracPreconditionError):
        chord_check(parse("x^a"), interval, 0.5)


def test_report_schema():
    report = chord_check(parse("x^(3a)"), (0.0, 2.0), 0.5, n_pairs=10, n_lambda=5).to_dict()

    assert report["check"] == "convexity.chord"
    assert report["satisfied"] is True
    assert report["grid"]["verdict"] == "convex"
    assert report["grid"]["n_pairs"] == 10
    assert report["grid"]["n_lambda"] == 5
    assert report["tolerance"] == 1e-9


def test_chord_check_is_deterministic():
    e = parse("-x^(2a)")

    first = chord_check(e, (0.0, 2.0), 0.5).to_dict()
    second = chord_check(e, (0.0, 2.0), 0.5).to_dict()

    assert first == second


def test_gradient_check():
    assert grad_monotone_check(parse("x^(3a)"), (0.0, 2.0), 0.5).verdict == FPVerdicts.convex

    report = grad_monotone_check(parse("-x^(2a)"), (0.0, 2.0), 0.5)

    assert report.verdict == FPVerdicts.nonconvex
    assert report.witnesses[0].lam is None


def test_support_line_check_at_alpha_one():
    assert support_line_check(parse("x^(3a)"), (0.0, 2.0), 1.0).verdict == FPVerdicts.convex
    assert support_line_check(parse("-x^(2a)"), (0.0, 2.0), 1.0).verdict == FPVerdicts.nonconvex


def test_second_derivative_check():
    assert second_deriv_check(parse("-x^(2a)"), (0.0, 2.0), 1.0).verdict == FPVerdicts.concave

    report = second_deriv_check(parse("x^a"), (0.0, 2.0), 0.5)

    assert report.verdict == FPVerdicts.convex
    assert report.concave


def test_second_derivative_of_jensen_bound_function():
    report = second_deriv_check(parse("(x+1/x)^(10a)"), (0.1, 0.9), 0.5)

    assert report.verdict == FPVerdicts.convex
    assert report.grid["n_points"] == 201


def test_checks_outside_the_rule_set_are_inconclusive():
    reports = convexity_reports(parse("x^2"), (0.0, 2.0), 0.5)

    assert reports["chord"].verdict != FPVerdicts.inconclusive
    assert reports["gradient"].verdict == FPVerdicts.inconclusive
    assert reports["gradient"].reason


def test_cross_check_agrees_at_alpha_one():
    result = cross_check(parse("x^(2a)"), (0.0, 2.0), 1.0)

    assert result.agree
    assert set(result.verdicts) == {"chord", "gradient", "support", "second"}
    assert all(verdict == FPVerdicts.convex for verdict in result.verdicts.values())


def test_cross_check_flags_the_support_line_below_one():
    # The support line of x^(3a) rises like |x2 - x1|^a and overshoots near x1
    result = cross_check(parse("x^(3a)"), (0.0, 2.0), 0.5)

    assert result.verdicts["chord"] == FPVerdicts.convex
    assert result.verdicts["support"] == FPVerdicts.nonconvex
    assert not result.agree


def test_slope_diag():
    diag = slope_diag(parse("x^(2a)"), (0.0, 1.0, 3.0), 1.0)

    assert diag.lhs == pytest.approx(1.0)
    assert diag.rhs == pytest.approx(4.0)
    assert diag.holds
    assert diag.fractal_holds

    assert slope_diag(parse("E(x^a)"), (0.0, 1.0, 2.0), 0.5).fractal_lhs is None


def test_slope_chain():
    chain = slope_chain_diag(parse("x^(2a)"), (0.0, 1.0, 3.0), 1.0)

    assert chain.slopes == pytest.approx((1.0, 3.0, 4.0))
    assert chain.holds

    with pytest.raises(FracPreconditionError):
        slope_chain_diag(parse("x^(2a)"), (0.0, 3.0, 1.0), 1.0)


def test_fractal_mode_is_the_classical_chord_check_of_the_base_image(rng):
    verdicts = set()

    for _ in range(100):
        alpha = float(rng.choice(ALPHAS))
        e = random_polynomial(rng, nonnegative=False, constant=True).to_expr()
        lo, hi = 0.0, float(rng.uniform(0.5, 3.0))

        report = chord_check(e, (lo, hi), alpha, FPModes.fractal, n_pairs=20, n_lambda=11)

        pairs = np.asarray(chord_pairs(lo, hi, 20))
        lam = lambda_grid(11)[None, :]
        x1, x2 = pairs[:, :1], pairs[:, 1:]

        lhs = eval_base(e, lam * x1 + (1.0 - lam) * x2, alpha)
        rhs = lam * eval_base(e, x1, alpha) + (1.0 - lam) * eval_base(e, x2, alpha)
        expected = FPVerdicts.nonconvex if violates(lhs, rhs, 1e-9).any() else FPVerdicts.convex

        assert report.verdict == expected, str(e)
        verdicts.add(report.verdict)

    assert verdicts == {FPVerdicts.convex, FPVerdicts.nonconvex}


def test_nonnegative_alpha_polynomials_are_convex(rng):
    for _ in range(100):
        alpha = float(rng.choice(ALPHAS))
        e = random_polynomial(rng).to_expr()

        report = chord_check(e, (0.0, float(rng.uniform(0.5, 3.0))), alpha)

        assert report.verdict == FPVerdicts.convex, str(e)


def test_characterizations_agree_or_log_a_finding(rng, caplog):
    frac_logger.setup(CONVEXITY)

    for _ in range(50):
        alpha = float(rng.choice(ALPHAS))
        e = random_polynomial(rng, nonnegative=False, constant=True).to_expr()

        caplog.clear()
        with caplog.at_level(logging.INFO):
            result = cross_check(e, (0.0, 2.0), alpha, n_pairs=20, n_lambda=11, n_points=51, n_support=21)

        assert set(result.verdicts) == {"chord", "gradient", "support", "second"}

        warned = any(
            record.levelno == logging.WARNING and str(e) in record.getMessage()
            for record in caplog.records
        )
        assert warned != result.agree, str(e)


def test_nonnegative_second_derivative_gives_jensen(rng):
    alpha = 0.5
    candidates = [(random_polynomial(rng, constant=True).to_expr(), (0.0, 3.0)) for _ in range(20)]
    candidates.append((parse("(x+1/x)^(10a)"), (0.1, 0.9)))

    for e, (lo, hi) in candidates:
        assert second_deriv_check(e, (lo, hi), alpha).verdict == FPVerdicts.convex, str(e)

        for _ in range(100):
            n = int(rng.integers(2, 7))
            report = jensen(e, rng.uniform(lo, hi, size=n), rng.dirichlet(np.ones(n)), alpha)

            assert report.satisfied, str(e)


def test_negative_constant_breaks_the_chain():
    # Weights l^a sum to more than 1, so the negative constant pulls the right side down
    e = parse("x^(2a) - 5")

    assert second_deriv_check(e, (0.0, 3.0), 0.5).verdict == FPVerdicts.convex

    report = jensen(e, [1.0, 3.0], [0.5, 0.5], 0.5)

    assert report.lhs == pytest.approx(-3.0)
    assert report.rhs == pytest.approx(-6.0 * math.sqrt(0.5))
    assert not report.satisfied
    assert jensen(e, [1.0, 3.0], [0.5, 0.5], 0.5, FPModes.fractal).satisfied
