import logging

import pytest

from fractconvex import parse, cross_check, frac_logger, CALC, CONVEXITY, FULL
from fractconvex.loggers import LogTimer, FracLogger


def test_timer():
    timer = LogTimer()

    with pytest.raises(RuntimeError):
        _ = timer.result

    result = timer.stop()

    assert result >= 0.0
    assert timer.result == result


def test_single_instance():
    assert FracLogger() is frac_logger


def test_loggers_are_quiet_by_default():
    assert all(logger.level == logging.CRITICAL for logger in frac_logger.all)


def test_setup_enables_one_branch():
    frac_logger.setup(CALC)

    assert frac_logger.main.level == logging.INFO
    assert frac_logger.calc.level == logging.INFO
    assert frac_logger.convexity.level == logging.CRITICAL

    frac_logger.setup(FULL)

    assert all(logger.level == logging.INFO for logger in frac_logger.all)


def test_logger_names():
    assert frac_logger.convexity.name == "fractconvex.checks.convexity"
    assert frac_logger.db.name == "fractconvex.db"


def test_disagreement_is_logged(caplog):
    frac_logger.setup(CONVEXITY)

    with caplog.at_level(logging.INFO):
        result = cross_check(parse("x^(3a)"), (0.0, 2.0), 0.5)

    assert not result.agree
    assert any(
        record.levelno == logging.WARNING and record.name == "fractconvex.checks.convexity"
        for record in caplog.records
    )
