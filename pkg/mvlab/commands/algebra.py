"""
Commands for traces and trace-expanded phase systems
"""
import click

from ..tasks.algebra import (
    NORMALIZATIONS, PHASE_SYSTEM_HEADER, expand_trace_phase, parse_minpoly, phase_system_rows,
    power_sums,
)
from ..utils.exceptions import InvalidInput
from . import common_options, emit, handle_errors, plural, resolve_config, summary

TRACES_HEADER = ["kappa", "trace"]


@click.command(name="traces")
@click.option(
    "--minpoly", required=True,
    help='Coefficients c_0,...,c_{d-1} of P(x) = x^d + ... + c_0, e.g. "-2,0,0" for x^3 - 2.',
)
@click.option("--kappa-max", type=int, default=10, show_default=True)
@common_options
@click.pass_context
@handle_errors
def traces_cmd(ctx, **_):
    """
    Tabulate Tr(alpha^kappa) for kappa = 0..kappa-max
    """
    config = resolve_config(ctx)
    if config["kappa_max"] < 0:
        raise InvalidInput("kappa-max can't be negative")
    minpoly = parse_minpoly(config["minpoly"])
    rows = list(enumerate(power_sums(minpoly, config["kappa_max"])))
    path = emit(config, TRACES_HEADER, rows)
    click.echo(summary(len(rows), "trace", path))


@click.command(name="phase-system")
@click.option("--minpoly", required=True, help="Coefficients c_0,...,c_{d-1} of P.")
@click.option("--k", type=int, required=True, help="Largest power j.")
@click.option(
    "--normalization", type=click.Choice(NORMALIZATIONS), default="content",
    show_default=True,
)
@common_options
@click.pass_context
@handle_errors
def phase_system_cmd(ctx, **_):
    """
    Expand the trace phase system of Q(alpha) into monomials
    """
    config = resolve_config(ctx)
    minpoly = parse_minpoly(config["minpoly"])
    system = expand_trace_phase(minpoly, config["k"], config["normalization"])
    rows = phase_system_rows(system)
    path = emit(config, PHASE_SYSTEM_HEADER, rows)
    click.echo(
        "%s: %s over a degree %s field; %s"
        % (
            system.name,
            plural(system.k, "component"),
            minpoly.degree,
            summary(len(rows), "term", path),
        )
    )