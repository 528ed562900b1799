from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner
from hypothesis import settings, HealthCheck

from fractconvex import frac_logger, AlphaPolynomial
from fractconvex.loggers import CRITICAL


settings.register_profile(
    "fractconvex",
    max_examples=50,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("fractconvex")


GOLDEN = Path(__file__).parent / "golden"

ALPHAS = (0.25, 0.5, 0.75, 1.0)


@pytest.fixture(autouse=True)
def quiet_loggers():
    yield
    frac_logger.setup(CRITICAL)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def golden():
    def load(name: str) -> str:
        return (GOLDEN / name).read_text(encoding="UTF-8")

    return load


def random_polynomial(
        rng: np.random.Generator,
        anchor: float = 0.0,
        nonnegative: bool = True,
        max_k: int = 4,
        constant: bool = False
) -> AlphaPolynomial:
    """Alpha polynomial with integer powers 1..max_k, a constant term if asked."""

    powers = rng.choice(np.arange(1, max_k + 1), size=rng.integers(1, max_k + 1), replace=False)
    low, high = (0.1, 5.0) if nonnegative else (-5.0, 5.0)

    terms = [(int(k), float(rng.uniform(low, high))) for k in powers]
    if constant:
        terms.append((0, float(rng.uniform(low, high))))

    return AlphaPolynomial(anchor, terms)
