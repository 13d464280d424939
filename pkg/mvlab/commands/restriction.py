"""
Commands for sampled restriction constants and the report-only
experiments built on them
"""
import click

from ..constants import SAMPLERS
from ..tasks.restriction import (
    NBYA_HEADER, RATIO_HEADER, SIDES, best_per_sampler, corollary_ratio_experiment,
    estimate_restriction_constant, nbya_report,
)
from ..utils.exceptions import InvalidInput
from ..utils.parsing import parse_int_list, parse_rational
from . import (
    common_options, emit, experiment_inputs, handle_errors, quadrature_config,
    quadrature_options, resolve_config, scale_options, summary, system_option,
)
from .meanvalue import MEAN_VALUE_HEADER


def parse_samplers(text):
    samplers = [entry.strip() for entry in text.split(",") if entry.strip()]
    for position, sampler in enumerate(samplers, start=1):
        if sampler not in SAMPLERS:
            raise InvalidInput(
                "Unknown sampler %r; expected one of %s" % (sampler, ", ".join(SAMPLERS)),
                position,
            )
    if not samplers:
        raise InvalidInput("At least one sampler is required")
    return tuple(samplers)


def sampling_options(func):
    """
    --samplers and --samples
    """
    options = [
        click.option(
            "--samplers", default=",".join(SAMPLERS), show_default=True,
            help="Comma list of coefficient samplers.",
        ),
        click.option(
            "--samples", type=int, default=4, show_default=True,
            help="Draws per random sampler.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.command(name="restriction-estimate")
@system_option()
@scale_options
@click.option("--r", type=float, required=True, help="Exponent r >= 2.")
@click.option("--side", type=click.Choice(SIDES), default="padic", show_default=True)
@sampling_options
@quadrature_options
@common_options
@click.pass_context
@handle_errors
def restriction_estimate_cmd(ctx, **_):
    """
    Sampled lower bound for the restriction constant on one side
    """
    config = resolve_config(ctx)
    system, scale, sigma, omega, _ = experiment_inputs(config)
    estimate = estimate_restriction_constant(
        system, omega, config["r"], scale, sigma, config["side"],
        parse_samplers(config["samplers"]), config.seed, config["samples"],
        quadrature_config(config), config.threads, config.progress,
    )
    rows = [
        (
            config.command, scale.p, scale.K, sigma.format(), float(config["r"]),
            sampler, config.seed, sample.value, sample.denominator, sample.ratio,
            sample.error_bound,
        )
        for sampler, sample in best_per_sampler(estimate).items()
    ]
    path = emit(config, MEAN_VALUE_HEADER, rows)
    click.echo(
        "%s restriction constant >= %r (%s); %s"
        % (config["side"], estimate.estimate, estimate.sampler, summary(len(rows), "row", path))
    )


@click.command(name="corollary-ratio")
@click.option("--p", type=int, required=True, help="Prime p.")
@click.option("--K", "big_k", required=True, help="Comma list of exponents K.")
@click.option("--sigma", default="1", show_default=True, help="Localization of n^2, in [0, 1].")
@click.option("--r", type=float, required=True, help="Exponent r >= 2.")
@click.option("--side", type=click.Choice(SIDES), default="padic", show_default=True)
@sampling_options
@quadrature_options
@common_options
@click.pass_context
@handle_errors
def corollary_ratio_cmd(ctx, **_):
    """
    Measured parabola restriction ratios next to N^{r/2} + N^{r-4+sigma} (report only)
    """
    config = resolve_config(ctx)
    rows = corollary_ratio_experiment(
        config["p"], parse_int_list(config["big_k"]), parse_rational(config["sigma"]),
        config["r"], parse_samplers(config["samplers"]), config.seed, config["samples"],
        config["side"], quadrature_config(config), config.threads,
    )
    path = emit(config, RATIO_HEADER, rows)
    click.echo(summary(len(rows), "ratio", path))


@click.command(name="nbya-report")
@system_option()
@scale_options
@click.option("--r", type=float, required=True, help="Exponent r >= 2.")
@sampling_options
@quadrature_options
@common_options
@click.pass_context
@handle_errors
def nbya_report_cmd(ctx, **_):
    """
    Tabulate sampled p-adic and real restriction constants against
    2^{(r+1)k} / prod epsilon_j (report only)
    """
    config = resolve_config(ctx)
    system, scale, sigma, omega, _ = experiment_inputs(config)
    rows, eps, factor = nbya_report(
        system, omega, config["r"], scale, sigma, parse_samplers(config["samplers"]),
        config.seed, config["samples"], quadrature_config(config), config.threads,
    )
    path = emit(config, NBYA_HEADER, rows)
    click.echo(
        "factor %r from epsilon = (%s); %s"
        % (factor, ", ".join(str(epsilon) for epsilon in eps), summary(len(rows), "row", path))
    )
