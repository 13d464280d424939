"""
Commands for p-adic and real mean values and the transference check
"""
import click

from ..constants import SAMPLERS
from ..models.report import MeanValueMethod
from ..tasks.meanvalue import SparseQuadrature, padic_short_mv, real_sparse_mv, transfer_check
from ..tasks.samplers import sample_coefficients
from ..utils.exceptions import VerificationFailed
from . import (
    coefficient_options, common_options, emit, experiment_inputs, handle_errors,
    plural, quadrature_config, quadrature_options, resolve_config, sampler_name,
    scale_options, summary, system_option,
)

MEAN_VALUE_HEADER = [
    "command", "p", "K", "sigma", "r", "sampler", "seed",
    "value", "denominator", "ratio", "error_bound",
]

TRANSFER_HEADER = [
    "sampler", "seed", "index", "real_value", "padic_sup_over_grid",
    "padic_at_zero", "error_bound", "grid_size", "passed",
]


def mean_value_row(config, sigma, report, denominator):
    ratio = report.value / denominator if denominator else 0.0
    return (
        config.command, config["p"], config["big_k"], sigma.format(), float(config["r"]),
        sampler_name(config), config.seed, report.value_text or report.value, denominator,
        ratio, report.quadrature_error_bound,
    )


@click.command(name="mv-padic")
@system_option()
@scale_options
@click.option("--r", type=float, required=True, help="Exponent r >= 2.")
@coefficient_options
@common_options
@click.pass_context
@handle_errors
def mv_padic_cmd(ctx, **_):
    """
    Exact p-adic short mean value over the sparse domain
    """
    config = resolve_config(ctx)
    system, scale, sigma, omega, a = experiment_inputs(config)
    report = padic_short_mv(
        system, omega, a, config["r"], scale, sigma, config.threads
    )
    row = mean_value_row(config, sigma, report, a.norm_power(config["r"]))
    emit(config, MEAN_VALUE_HEADER, [row])
    click.echo(
        "p-adic mean value %s over %s"
        % (report.value_text or repr(report.value), plural(report.cells, "cell"))
    )


@click.command(name="mv-real")
@system_option()
@scale_options
@click.option("--r", type=float, required=True, help="Exponent r >= 2.")
@coefficient_options
@quadrature_options
@common_options
@click.pass_context
@handle_errors
def mv_real_cmd(ctx, **_):
    """
    Real mean value over the sparse domain: an exact torus average at sigma = 0
    for even r, tensor Gauss-Legendre quadrature otherwise
    """
    config = resolve_config(ctx)
    system, scale, sigma, omega, a = experiment_inputs(config)
    report = real_sparse_mv(
        system, omega, a, config["r"], scale, sigma, quadrature_config(config),
        config.threads,
    )
    row = mean_value_row(config, sigma, report, a.norm_power(config["r"]))
    emit(config, MEAN_VALUE_HEADER, [row])
    value = report.value_text or repr(report.value)
    if report.method == MeanValueMethod.REAL_TORUS:
        click.echo(
            "Real mean value %s, exact on a torus grid of %s"
            % (value, plural(report.cells, "point"))
        )
    else:
        click.echo(
            "Real mean value %s (error bound %.3g) from %s per cell"
            % (value, report.quadrature_error_bound, plural(report.nodes, "node"))
        )


@click.command(name="transfer-check")
@system_option()
@scale_options
@click.option("--r", type=float, required=True, help="Exponent r >= 2.")
@click.option(
    "--sampler", default="random-phases", show_default=True,
    type=click.Choice(SAMPLERS),
)
@click.option("--samples", type=int, default=1, show_default=True)
@quadrature_options
@common_options
@click.pass_context
@handle_errors
def transfer_check_cmd(ctx, **_):
    """
    Check the real mean value against p-adic mean values of modulated coefficients
    """
    config = resolve_config(ctx)
    system, scale, sigma, omega, _ = experiment_inputs(config)
    quadrature = SparseQuadrature(
        system, omega, config["r"], scale, sigma, quadrature_config(config), config.threads
    )
    rows = []
    failures = 0
    for index in range(config["samples"]):
        a = sample_coefficients(config["sampler"], omega, config.seed, index)
        report = transfer_check(
            system, omega, a, config["r"], scale, sigma, quadrature=quadrature
        )
        failures += not report.passed
        rows.append((
            config["sampler"], config.seed, index, report.real_value,
            report.padic_sup_over_grid, report.padic_at_zero,
            report.quadrature_error_bound, report.grid_size, report.passed,
        ))
    path = emit(config, TRANSFER_HEADER, rows)
    click.echo(summary(len(rows), "check", path))
    if failures:
        raise VerificationFailed(
            "Transference failed for %s of %s" % (failures, plural(len(rows), "vector"))
        )
