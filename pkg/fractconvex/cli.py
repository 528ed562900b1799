"""
Command line front end of fractconvex.

Exit codes: 0 - success, satisfied or convex; 1 - violated or not convex; 2 - parse, domain or usage error.
Settings come from flags, then from the :code:`--config` JSON file, then from built-in defaults.
"""

import sys
import logging
import functools
from typing import Any, Optional, Callable, Iterable, Union

import click
from click.core import ParameterSource

from . import __version__
from .parsers import parse
from .expr import Expr, eval_real, eval_fractal
from .calculus import alpha_diff, lfi_expr, lfi_fractal, taylor_alpha, numeric_dalpha, riemann_diag
from .checkers import (
    chord_check,
    grad_monotone_check,
    support_line_check,
    second_deriv_check,
    convexity_reports,
    cross_check,
    jensen,
    hermite_hadamard,
    cauchy_schwarz,
    cauchy_schwarz_via_jensen,
    power_mean_compare,
    run_example,
    default_inputs
)
from .database import FracDB, FracDBOrm
from .types import ConvexityReport, InequalityReport
from .tuples import SweepRow
from .params import FPModes, FPFormats, FPChecks, FPConvexityMethods, FPExamples, FracRunConfig
from .utils import render_json, render_csv, alpha_range, json_number
from .exc import FracExc, FracConfigExc
from .config import riemann_default_ns
from .loggers import frac_logger


__all__ = (
    "cli",
)


Report = Union[ConvexityReport, InequalityReport]

# Columns of report rows in CSV output
_REPORT_COLUMNS = ("check", "alpha", "mode", "lhs", "mid", "rhs", "margin1", "margin2", "satisfied", "tolerance")

# Power means are monotone only in fractal mode
_SWEEP_DEFAULTS: dict[str, dict[str, Any]] = {FPChecks.powermean: {"mode": FPModes.fractal}}

_LOG_LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL
}


########################################################################################################################


def _float_list(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[list[float]]:
    if value is None:
        return None

    try:
        return [float(item) for item in value.split(",") if item.strip()]

    except ValueError:
        raise click.BadParameter(f"expected comma separated numbers, got '{value}'") from None


def _interval(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[tuple[float, float]]:
    values = _float_list(ctx, param, value)

    if values is not None and len(values) != 2:
        raise click.BadParameter(f"expected lo,hi, got '{value}'")

    return None if values is None else (values[0], values[1])


def _inputs(ctx: click.Context, param: click.Parameter, value: tuple[str, ...]) -> dict[str, Any]:
    """:code:`key=value` pairs, lists are comma separated, modes stay text."""

    inputs = {}
    for item in value:
        key, sep, text = item.partition("=")

        if not sep or not key:
            raise click.BadParameter(f"expected key=value, got '{item}'")

        if text in FPModes.all:
            inputs[key] = text
        elif "," in text:
            inputs[key] = _float_list(ctx, param, text)
        else:
            try:
                inputs[key] = float(text)

            except ValueError:
                raise click.BadParameter(f"expected a number for '{key}', got '{text}'") from None

    return inputs


def run_options(func: Callable) -> Callable:
    """Flags shared by every command."""

    options = (
        click.option("--alpha", type=float, default=None, help="Fractal order in (0, 1]. Default 1."),
        click.option("--mode", type=click.Choice(FPModes.all), default=None, help="Arithmetic. Default real, fractal for power means."),
        click.option("--tol", type=float, default=None, help="Absolute tolerance on margins. Default 1e-9."),
        click.option("--format", "fmt", type=click.Choice(FPFormats.all), default=None, help="Output format."),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file."),
        click.option("--config", type=click.Path(exists=True, dir_okay=False), default=None, help="JSON config file."),
        click.option("--db", default=None, help="SQLAlchemy URL of the report archive."),
        click.option("--log-level", type=click.Choice(tuple(_LOG_LEVELS)), default="critical", help="Log level.")
    )

    for option in reversed(options):
        func = option(func)

    return func


def grid_options(func: Callable) -> Callable:
    """Sizes of convexity grids."""

    options = (
        click.option("--n-pairs", "n_pairs", type=int, default=None, help="Chord node pairs. Default 50."),
        click.option("--n-lambda", "n_lambda", type=int, default=None, help="Chord lambdas. Default 41."),
        click.option("--n-points", "n_points", type=int, default=None, help="Derivative samples. Default 201."),
        click.option("--n-support", "n_support", type=int, default=None, help="Support line nodes. Default 41.")
    )

    for option in reversed(options):
        func = option(func)

    return func


def guarded(func: Callable) -> Callable:
    """Turn toolkit errors into a message on standard error and exit code 2."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)

        except FracExc as error:
            frac_logger.cli.error(f"Command failed: {error}")
            click.echo(f"Error: {error}", err=True)
            click.get_current_context().exit(2)

    return wrapper


def _setup_logging(level: str) -> None:
    if level != "critical":
        logging.basicConfig(stream=sys.stderr, format="%(name)s %(levelname)s: %(message)s")

    frac_logger.setup(_LOG_LEVELS[level])


def _explicit(ctx: click.Context, name: str) -> bool:
    return ctx.get_parameter_source(name) in (ParameterSource.COMMANDLINE, ParameterSource.ENVIRONMENT)


def _run_config(ctx: click.Context, **defaults: Any) -> FracRunConfig:
    """Settings of the run, flags win over the config file, the file over command defaults."""

    _setup_logging(ctx.params.get("log_level") or "critical")

    cli_values = {
        name: value for name, value in ctx.params.items()
        if name in FracRunConfig.defaults and _explicit(ctx, name)
    }

    run = FracRunConfig.from_sources(cli_values, ctx.params.get("config"), defaults)
    frac_logger.cli.info(f"Run settings: {vars(run)}")
    return run


def _require(value: Any, name: str, command: str) -> Any:
    if value is None:
        raise click.UsageError(f"--{name} is required for {command}")

    return value


########################################################################################################################


def _emit(run: FracRunConfig, text: str) -> None:
    if run.out is None:
        click.echo(text, nl=False)
        return

    try:
        with open(run.out, "w", encoding="UTF-8", newline="") as file:
            file.write(text)

    except OSError as error:
        frac_logger.cli.error(f"Can not write output: {error}")
        raise FracConfigExc(f"can not write output file '{run.out}': {error}") from error


def _report_row(payload: dict[str, Any]) -> list[Any]:
    margins = list(payload["margins"]) + [None, None]

    return [
        payload["check"], payload["alpha"], payload["mode"], payload["lhs"], payload["mid"], payload["rhs"],
        margins[0], margins[1], payload["satisfied"], payload["tolerance"]
    ]


def _render_reports(reports: list[Report], fmt: str, single: bool = True) -> str:
    payloads = [report.to_dict() for report in reports]

    if fmt == FPFormats.csv:
        return render_csv(_REPORT_COLUMNS, [_report_row(payload) for payload in payloads])

    if fmt == FPFormats.text:
        return "\n\n".join(report.compile() for report in reports) + "\n"

    return render_json(payloads[0] if single else payloads)


def _render_values(payload: dict[str, Any], fmt: str) -> str:
    """Output of calculus commands, CSV and text keep scalar fields only."""

    if fmt == FPFormats.json:
        return render_json(payload)

    scalars = {key: value for key, value in payload.items() if not isinstance(value, (list, dict))}

    if fmt == FPFormats.csv:
        return render_csv(list(scalars), [list(scalars.values())])

    return "".join(f"{key}: {value}\n" for key, value in scalars.items())


def _archive(run: FracRunConfig, reports: Iterable[Report]) -> None:
    if run.db is None:
        return

    frac_db = FracDB(url=run.db)

    @frac_db.orm_decorator()
    def save(orm: FracDBOrm) -> None:
        for report in reports:
            orm.add_report(report)

    try:
        save()

    finally:
        frac_db.engine.dispose()

    frac_logger.cli.info(f"Reports archived in {run.db}")


########################################################################################################################


@click.group(name="fractconvex", context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="fractconvex")
def cli() -> None:
    """Local fractional calculus on R^a with generalized convexity and inequality checks."""


@cli.command(name="eval")
@click.option("--expr", required=True, help="Expression in x, for example \"x^(3a) + 2^a\".")
@click.option("--at", type=float, required=True, help="Point of evaluation.")
@run_options
@click.pass_context
@guarded
def eval_cmd(ctx: click.Context, expr: str, at: float, **options: Any) -> None:
    """Evaluate an expression at a point."""

    run = _run_config(ctx)
    e = parse(expr)

    if run.mode == FPModes.fractal:
        number = eval_fractal(e, at, run.alpha)
        value, base = number.display, number.base
    else:
        value, base = float(eval_real(e, at, run.alpha)), None

    payload = {
        "expr": str(e),
        "alpha": run.alpha,
        "mode": run.mode,
        "at": at,
        "value": json_number(value),
        "base": json_number(base)
    }

    _emit(run, _render_values(payload, run.fmt))


@cli.command(name="diff")
@click.option("--expr", required=True, help="Expression in x.")
@click.option("--order", type=click.IntRange(min=1), default=1, show_default=True, help="Times to differentiate.")
@click.option("--at", type=float, default=None, help="Point where the derivative is evaluated.")
@run_options
@click.pass_context
@guarded
def diff_cmd(ctx: click.Context, expr: str, order: int, at: Optional[float], **options: Any) -> None:
    """Local fractional derivative of order alpha, applied ORDER times."""

    run = _run_config(ctx)
    e = parse(expr)
    result = alpha_diff(e, run.alpha, order)

    payload = {"expr": str(e)}
    payload.update(result.to_dict(at))

    if at is not None and order == 1:
        payload["difference_quotient"] = json_number(numeric_dalpha(e, at, run.alpha))

    _emit(run, _render_values(payload, run.fmt))


@cli.command(name="integrate")
@click.option("--expr", required=True, help="Expression in x.")
@click.option("--from", "lower", type=float, required=True, help="Lower limit.")
@click.option("--to", "upper", type=float, required=True, help="Upper limit.")
@click.option("--riemann", is_flag=True, help="Add the literal Riemann sum diagnostic.")
@run_options
@click.pass_context
@guarded
def integrate_cmd(ctx: click.Context, expr: str, lower: float, upper: float, riemann: bool, **options: Any) -> None:
    """Local fractional integral from FROM to TO."""

    run = _run_config(ctx)
    e = parse(expr)

    if run.mode == FPModes.fractal:
        number = lfi_fractal(e, lower, upper, run.alpha)
        value, base = number.display, number.base
    else:
        value, base = lfi_expr(e, lower, upper, run.alpha), None

    payload = {
        "expr": str(e),
        "alpha": run.alpha,
        "mode": run.mode,
        "from": lower,
        "to": upper,
        "value": json_number(value),
        "base": json_number(base)
    }

    if riemann:
        payload["riemann"] = riemann_diag(e, lower, upper, run.alpha).to_dict()

    _emit(run, _render_values(payload, run.fmt))


@cli.command(name="taylor")
@click.option("--expr", required=True, help="Expression in x.")
@click.option("--x0", type=float, default=0.0, show_default=True, help="Expansion point.")
@click.option("--order", type=click.IntRange(min=0), default=3, show_default=True, help="Order of the polynomial.")
@click.option("--interval", callback=_interval, default=None, help="Interval of the remainder bound, lo,hi.")
@run_options
@click.pass_context
@guarded
def taylor_cmd(
        ctx: click.Context,
        expr: str,
        x0: float,
        order: int,
        interval: Optional[tuple[float, float]],
        **options: Any
) -> None:
    """Generalized Taylor polynomial with a sampled remainder bound."""

    run = _run_config(ctx)
    e = parse(expr)
    result = taylor_alpha(e, x0, order, run.alpha, interval)

    payload = {
        "expr": str(e),
        "alpha": run.alpha,
        "x0": x0,
        "order": order,
        "polynomial": str(result.polynomial.to_expr()),
        "coefficients": [[str(k), json_number(c)] for k, c in result.polynomial.terms],
        "remainder_bound": json_number(result.remainder_bound),
        "interval": list(result.interval)
    }

    _emit(run, _render_values(payload, run.fmt))


@cli.command(name="convexity")
@click.option("--expr", required=True, help="Expression in x.")
@click.option("--interval", callback=_interval, required=True, help="Interval lo,hi.")
@click.option(
    "--method", type=click.Choice(FPConvexityMethods.all), default=FPConvexityMethods.chord, show_default=True,
    help="Characterization, all runs the four of them."
)
@click.option("--strict", is_flag=True, help="Strict chord inequality.")
@grid_options
@run_options
@click.pass_context
@guarded
def convexity_cmd(
        ctx: click.Context,
        expr: str,
        interval: tuple[float, float],
        method: str,
        strict: bool,
        **options: Any
) -> None:
    """Generalized convexity of an expression on an interval."""

    run = _run_config(ctx)
    e = parse(expr)

    if method == FPConvexityMethods.all_methods:
        reports_by_method = convexity_reports(e, interval, run.alpha, run.n_pairs, run.n_lambda, run.n_points, run.n_support)
        cross_check(e, interval, run.alpha, reports=reports_by_method)
        reports = list(reports_by_method.values())

    elif method == FPConvexityMethods.chord:
        reports = [chord_check(e, interval, run.alpha, run.mode, run.n_pairs, run.n_lambda, strict, run.tol)]

    elif method == FPConvexityMethods.gradient:
        reports = [grad_monotone_check(e, interval, run.alpha, run.n_points)]

    elif method == FPConvexityMethods.support:
        reports = [support_line_check(e, interval, run.alpha, run.n_support, run.tol)]

    else:
        reports = [second_deriv_check(e, interval, run.alpha, run.n_points)]

    _emit(run, _render_reports(reports, run.fmt, single=method != FPConvexityMethods.all_methods))
    _archive(run, reports)

    ctx.exit(0 if all(report.is_convex for report in reports) else 1)


@cli.group(name="verify")
def verify() -> None:
    """Verify one of the generalized inequalities."""


def _finish(ctx: click.Context, run: FracRunConfig, report: InequalityReport) -> None:
    _emit(run, _render_reports([report], run.fmt))
    _archive(run, [report])

    ctx.exit(0 if report.satisfied else 1)


@verify.command(name=FPChecks.jensen)
@click.option("--expr", required=True, help="Expression in x.")
@click.option("--xs", callback=_float_list, required=True, help="Points, comma separated.")
@click.option("--lambdas", callback=_float_list, required=True, help="Weights summing to 1, comma separated.")
@run_options
@click.pass_context
@guarded
def verify_jensen(ctx: click.Context, expr: str, xs: list[float], lambdas: list[float], **options: Any) -> None:
    """Generalized Jensen inequality."""

    run = _run_config(ctx)
    _finish(ctx, run, jensen(parse(expr), xs, lambdas, run.alpha, run.mode, run.tol))


@verify.command(name=FPChecks.hh)
@click.option("--expr", required=True, help="Expression in x, anchored at the left end in real mode.")
@click.option("--interval", callback=_interval, required=True, help="Interval a,b.")
@run_options
@click.pass_context
@guarded
def verify_hh(ctx: click.Context, expr: str, interval: tuple[float, float], **options: Any) -> None:
    """Generalized Hermite-Hadamard inequality."""

    run = _run_config(ctx)
    a, b = interval
    _finish(ctx, run, hermite_hadamard(parse(expr), a, b, run.alpha, run.mode, run.tol))


@verify.command(name=FPChecks.cs)
@click.option("--a", "as_", callback=_float_list, required=True, help="First vector, comma separated.")
@click.option("--b", "bs", callback=_float_list, required=True, help="Second vector, comma separated.")
@click.option("--via-jensen", is_flag=True, help="Verify the Jensen instance behind the inequality.")
@run_options
@click.pass_context
@guarded
def verify_cs(ctx: click.Context, as_: list[float], bs: list[float], via_jensen: bool, **options: Any) -> None:
    """Generalized Cauchy-Schwarz inequality."""

    run = _run_config(ctx)
    check = cauchy_schwarz_via_jensen if via_jensen else cauchy_schwarz
    _finish(ctx, run, check(as_, bs, run.alpha, run.tol))


@verify.command(name=FPChecks.powermean)
@click.option("--data", callback=_float_list, required=True, help="Positive data, comma separated.")
@click.option("--s", type=float, required=True, help="Smaller order.")
@click.option("--t", type=float, required=True, help="Larger order.")
@run_options
@click.pass_context
@guarded
def verify_powermean(ctx: click.Context, data: list[float], s: float, t: float, **options: Any) -> None:
    """Power mean monotonicity S_s <= S_t, fractal mode unless --mode is given."""

    run = _run_config(ctx, mode=FPModes.fractal)
    _finish(ctx, run, power_mean_compare(data, s, t, run.alpha, run.mode, run.tol))


@cli.command(name="examples")
@click.option("--id", "example", type=click.Choice(FPExamples.all), required=True, help="Scenario id.")
@click.option("--input", "inputs", multiple=True, callback=_inputs, help="Scenario input key=value, repeatable.")
@run_options
@click.pass_context
@guarded
def examples_cmd(ctx: click.Context, example: str, inputs: dict[str, Any], **options: Any) -> None:
    """Worked scenarios, missing inputs take feasible defaults."""

    run = _run_config(ctx)

    merged = default_inputs(example, run.alpha)
    merged.update(inputs)

    _finish(ctx, run, run_example(example, run.alpha, merged, run.tol))


@cli.command(name="sweep")
@click.option("--check", type=click.Choice(FPChecks.sweep), required=True, help="Check run at every alpha.")
@click.option("--alphas", default=None, help="Alpha range start:stop:step, --alpha if not given.")
@click.option("--expr", default=None, help="Expression in x.")
@click.option("--interval", callback=_interval, default=None, help="Interval lo,hi.")
@click.option("--xs", callback=_float_list, default=None, help="Jensen points.")
@click.option("--lambdas", callback=_float_list, default=None, help="Jensen weights.")
@click.option("--a", "as_", callback=_float_list, default=None, help="First Cauchy-Schwarz vector.")
@click.option("--b", "bs", callback=_float_list, default=None, help="Second Cauchy-Schwarz vector.")
@click.option("--data", callback=_float_list, default=None, help="Power mean data.")
@click.option("--s", type=float, default=None, help="Smaller power mean order.")
@click.option("--t", type=float, default=None, help="Larger power mean order.")
@click.option("--ns", callback=_float_list, default=None, help="Riemann partition counts. Default 100,1000,10000.")
@run_options
@click.pass_context
@guarded
def sweep_cmd(ctx: click.Context, check: str, **options: Any) -> None:
    """One CSV row per alpha, in ascending order."""

    run = _run_config(ctx, **_SWEEP_DEFAULTS.get(check, {}))
    alphas = alpha_range(run.alphas) if run.alphas is not None else [run.alpha]
    fmt = run.fmt if _explicit(ctx, "fmt") else FPFormats.csv

    if check == FPChecks.riemann_diag:
        e = parse(_require(options["expr"], "expr", check))
        lo, hi = _require(options["interval"], "interval", check)
        ns = [int(n) for n in options["ns"]] if options["ns"] else list(riemann_default_ns)

        diags = [riemann_diag(e, lo, hi, alpha, ns) for alpha in alphas]
        rows = [
            [diag.alpha.value, n, value, diag.growth_exponent]
            for diag in diags for n, value in zip(diag.ns, diag.sums)
        ]

        if fmt == FPFormats.json:
            _emit(run, render_json([diag.to_dict() for diag in diags]))
        else:
            _emit(run, render_csv(("alpha", "n", "sum", "growth_exponent"), rows))

        return

    reports = [_sweep_report(check, alpha, run, options) for alpha in alphas]

    rows = []
    for report in reports:
        payload = report.to_dict()
        margins = list(payload["margins"]) + [None, None]

        rows.append(SweepRow(
            payload["alpha"], payload["mode"], payload["lhs"], payload["mid"], payload["rhs"],
            margins[0], margins[1], payload["satisfied"]
        ))

    if fmt == FPFormats.json:
        _emit(run, render_json([row._asdict() for row in rows]))
    else:
        _emit(run, render_csv(SweepRow._fields, rows))

    _archive(run, reports)


def _sweep_report(check: str, alpha: float, run: FracRunConfig, options: dict[str, Any]) -> InequalityReport:
    if check == FPChecks.jensen:
        e: Expr = parse(_require(options["expr"], "expr", check))
        return jensen(
            e, _require(options["xs"], "xs", check), _require(options["lambdas"], "lambdas", check),
            alpha, run.mode, run.tol
        )

    if check == FPChecks.hh:
        a, b = _require(options["interval"], "interval", check)
        return hermite_hadamard(parse(_require(options["expr"], "expr", check)), a, b, alpha, run.mode, run.tol)

    if check == FPChecks.cs:
        return cauchy_schwarz(_require(options["as_"], "a", check), _require(options["bs"], "b", check), alpha, run.tol)

    return power_mean_compare(
        _require(options["data"], "data", check), _require(options["s"], "s", check),
        _require(options["t"], "t", check), alpha, run.mode, run.tol
    )
