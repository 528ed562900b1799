import json
from typing import Optional, Any, Union
from pathlib import Path

from .exc import FracConfigExc
from .config import (
    default_tolerance,
    default_chord_pairs,
    default_chord_lambdas,
    default_derivative_points,
    default_support_points
)
from .loggers import frac_logger


__all__ = (
    "FPModes",
    "FPVerdicts",
    "FPFormats",
    "FPChecks",
    "FPConvexityMethods",
    "FPExamples",
    "FracRunConfig"
)


class FPModes:
    """
    Arithmetic in which values of a function are combined.

    Note:
        FP - Frac Params\n
        :code:`real` - displayed values with ordinary +, x\n
        :code:`fractal` - alpha-type arithmetic on bases
    """

    real = "real"
    fractal = "fractal"

    all = (real, fractal)


class FPVerdicts:
    """
    Verdicts of convexity checks.

    Note:
        FP - Frac Params
    """

    convex = "convex"
    strictly_convex = "strictly_convex"
    concave = "concave"
    nonconvex = "nonconvex"
    inconclusive = "inconclusive"

    all = (convex, strictly_convex, concave, nonconvex, inconclusive)
    positive = (convex, strictly_convex)


class FPFormats:
    """
    Output format of CLI reports.

    Note:
        FP - Frac Params
    """

    json = "json"
    csv = "csv"
    text = "text"

    all = (json, csv, text)


class FPChecks:
    """
    Names of checks, used in reports and in the sweep command.

    Note:
        FP - Frac Params
    """

    jensen = "jensen"
    hh = "hh"
    cs = "cs"
    powermean = "powermean"
    riemann_diag = "riemann-diag"

    verify = (jensen, hh, cs, powermean)
    sweep = (jensen, hh, cs, powermean, riemann_diag)


class FPConvexityMethods:
    """
    Characterizations used by the convexity command.

    Note:
        FP - Frac Params
    """

    chord = "chord"
    gradient = "gradient"
    support = "support"
    second = "second"
    all_methods = "all"

    all = (chord, gradient, support, second, all_methods)


class FPExamples:
    """
    Ids of the worked scenarios.

    Note:
        FP - Frac Params
    """

    sum_bound = "5.1"
    ml_midpoint = "5.2"
    power_mean = "5.3"
    jensen_bound = "5.4"
    constrained_ratio = "5.5"

    all = (sum_bound, ml_midpoint, power_mean, jensen_bound, constrained_ratio)


class FracRunConfig:
    """
    Settings of one CLI run. Values come from CLI flags, then from a JSON config file,
    then from built-in defaults.

    Args:
        alpha: Fractal order of a single run.
        alphas: Alpha range :code:`start:stop:step` for sweeps.
        mode: One of :code:`FPModes`.
        n_pairs: Node pairs of the chord grid.
        n_lambda: Lambda values of the chord grid.
        n_points: Samples of derivative based checks.
        n_support: Nodes of the supporting line grid.
        tol: Absolute tolerance on margins.
        fmt: One of :code:`FPFormats`.
        out: Output path, standard output if not.
        db: SQLAlchemy URL of the report archive.
    """

    # Built-in defaults
    defaults: dict[str, Any] = {
        "alpha": 1.0,
        "alphas": None,
        "mode": FPModes.real,
        "n_pairs": default_chord_pairs,
        "n_lambda": default_chord_lambdas,
        "n_points": default_derivative_points,
        "n_support": default_support_points,
        "tol": default_tolerance,
        "fmt": FPFormats.json,
        "out": None,
        "db": None
    }

    # Magic methods
    def __init__(
            self,
            alpha: float = defaults["alpha"],
            alphas: Optional[str] = defaults["alphas"],
            mode: str = defaults["mode"],
            n_pairs: int = defaults["n_pairs"],
            n_lambda: int = defaults["n_lambda"],
            n_points: int = defaults["n_points"],
            n_support: int = defaults["n_support"],
            tol: float = defaults["tol"],
            fmt: str = defaults["fmt"],
            out: Optional[str] = defaults["out"],
            db: Optional[str] = defaults["db"]
    ) -> None:

        if mode not in FPModes.all:
            raise FracConfigExc(f"Unknown mode '{mode}'")

        if fmt not in FPFormats.all:
            raise FracConfigExc(f"Unknown format '{fmt}'")

        self.alpha = float(alpha)
        self.alphas = alphas
        self.mode = mode
        self.n_pairs = int(n_pairs)
        self.n_lambda = int(n_lambda)
        self.n_points = int(n_points)
        self.n_support = int(n_support)
        self.tol = float(tol)
        self.fmt = fmt
        self.out = out
        self.db = db

    # Class methods
    @classmethod
    def load_file(cls, path: Union[str, Path]) -> dict[str, Any]:
        """
        Read a JSON config file.

        Args:
            path: Path to a JSON object with the same keys as the CLI flags.

        Returns:
            Known keys of the file.

        Raises:
            FracConfigExc: If file is unreadable, not an object or has unknown keys.
        """

        try:
            raw = json.loads(Path(path).read_text(encoding="UTF-8"))

        except (OSError, ValueError) as error:
            frac_logger.cli.error(f"Failed to read config file: {error}")
            raise FracConfigExc(f"Can not read config file '{path}': {error}") from error

        if not isinstance(raw, dict):
            raise FracConfigExc("Config file must hold a JSON object")

        # Flags are spelled with dashes on the command line
        values = {key.replace("-", "_"): value for key, value in raw.items()}
        if "format" in values:
            values["fmt"] = values.pop("format")

        unknown = sorted(set(values) - set(cls.defaults) - {"config"})
        if unknown:
            raise FracConfigExc(f"Unknown config keys: {', '.join(unknown)}")

        values.pop("config", None)
        return values

    @classmethod
    def from_sources(
            cls,
            cli_values: dict[str, Any],
            config_path: Optional[Union[str, Path]] = None,
            defaults: Optional[dict[str, Any]] = None
    ) -> "FracRunConfig":
        """
        Merge settings with precedence CLI > file > command defaults > built-in defaults.

        Args:
            cli_values: Values explicitly given on the command line.
            config_path: Optional JSON config file.
            defaults: Defaults of one command, for example fractal mode of the power mean.

        Returns:
            Merged :code:`FracRunConfig`.
        """

        merged = dict(cls.defaults)
        merged.update({key: value for key, value in (defaults or {}).items() if key in cls.defaults})

        if config_path is not None:
            merged.update(cls.load_file(config_path))

        merged.update({key: value for key, value in cli_values.items() if key in cls.defaults})
        return cls(**merged)
