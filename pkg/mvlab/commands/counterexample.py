"""
Commands for the p-adic paraboloid counterexample
"""
import click

from ..tasks.counterexample import GROWTH_HEADER, counterexample_growth
from ..utils.parsing import parse_float_list
from . import common_options, emit, handle_errors, resolve_config, summary


@click.command(name="counterexample")
@click.option("--p", type=int, default=5, show_default=True, help="Prime p = 1 mod 4.")
@click.option("--kmax", type=int, default=3, show_default=True, help="Largest k (N = p^k).")
@click.option("--r", "r_list", default="6", show_default=True, help="Comma list of exponents r.")
@common_options
@click.pass_context
@handle_errors
def counterexample_cmd(ctx, **_):
    """
    Growth of the decoupling ratio for the p-adic paraboloid counterexample
    """
    config = resolve_config(ctx)
    rows, slopes = counterexample_growth(
        config["p"], config["kmax"], parse_float_list(config["r_list"]),
        config.threads, progress=config.progress,
    )
    path = emit(config, GROWTH_HEADER, rows)
    click.echo(summary(len(rows), "row", path))
    for r, slope in slopes.items():
        if slope is None:
            continue
        click.echo(
            "r=%s: sum_norm slope %.4f (expected %.4f), ratio slope %.4f (expected %.4f)"
            % (r, slope.sum_slope, slope.expected_sum, slope.ratio_slope, slope.expected_ratio)
        )
