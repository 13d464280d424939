"""
Commands for counting solutions of Vinogradov systems with algebraic
indeterminates
"""
import click

from ..models.solutions import CountingMethod
from ..tasks.algebra import parse_minpoly
from ..tasks.vinogradov import (
    SOLUTION_HEADER, count_solutions, count_solutions_brute, count_solutions_formal,
    fit_growth, solution_rows,
)
from ..utils.exceptions import InvalidInput
from ..utils.parsing import parse_int_list
from . import common_options, emit, handle_errors, resolve_config

METHODS = (CountingMethod.HASH, CountingMethod.BRUTE, CountingMethod.FORMAL)


def counting_options(func):
    """
    --minpoly, --d, --s, --k, --N, --method and --timing
    """
    options = [
        click.option("--minpoly", required=True, help="Coefficients c_0,...,c_{d-1} of P."),
        click.option("--d", type=int, default=None, help="Degree of P (checked if given)."),
        click.option("--s", type=int, required=True, help="Number of unknowns per side."),
        click.option("--k", type=int, required=True, help="Highest power."),
        click.option("--N", "big_n", required=True, help="Comma list of box sizes N."),
        click.option("--method", type=click.Choice(METHODS), default="hash", show_default=True),
        click.option("--timing", is_flag=True, default=False, help="Fill the seconds column."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def counting_inputs(config):
    minpoly = parse_minpoly(config["minpoly"])
    if config["d"] is not None and config["d"] != minpoly.degree:
        raise InvalidInput(
            "--d %s does not match the degree %s of %s" % (config["d"], minpoly.degree, minpoly)
        )
    return minpoly, parse_int_list(config["big_n"])


def count(config, minpoly, N):  # pylint: disable=invalid-name
    s, k = config["s"], config["k"]
    if config["method"] == CountingMethod.BRUTE:
        return count_solutions_brute(minpoly, s, k, N, timing=config["timing"])
    counter = (
        count_solutions_formal if config["method"] == CountingMethod.FORMAL else count_solutions
    )
    return counter(
        minpoly, s, k, N, threads=config.threads, progress=config.progress,
        timing=config["timing"],
    )


@click.command(name="vinogradov")
@counting_options
@common_options
@click.pass_context
@handle_errors
def vinogradov_cmd(ctx, **_):
    """
    Count solutions J_{s,k,d}(N; alpha) for each N
    """
    config = resolve_config(ctx)
    minpoly, n_list = counting_inputs(config)
    records = [count(config, minpoly, N) for N in n_list]
    emit(config, SOLUTION_HEADER, solution_rows(records))
    click.echo("J=%s" % ",".join(str(record.J) for record in records))


@click.command(name="vinogradov-fit")
@counting_options
@common_options
@click.pass_context
@handle_errors
def vinogradov_fit_cmd(ctx, **_):
    """
    Fit the growth exponent of J against N
    """
    config = resolve_config(ctx)
    minpoly, n_list = counting_inputs(config)
    counter_kwargs = None
    if config["method"] != CountingMethod.BRUTE:
        counter_kwargs = dict(
            threads=config.threads, progress=config.progress, timing=config["timing"]
        )
    fit = fit_growth(
        minpoly, config["s"], config["k"], n_list, config["method"], counter_kwargs
    )
    emit(config, SOLUTION_HEADER, solution_rows(fit.records))
    click.echo(
        "slope %.4f (envelope exponent %s)" % (fit.slope, fit.envelope_exponent)
    )
