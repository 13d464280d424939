"""
Commands for p-adic lifts
"""
import click

from ..tasks.padic import hensel_sqrt_minus_one
from ..utils.csvfiles import write_csv
from . import common_options, handle_errors, resolve_config

HENSEL_HEADER = ["p", "K", "xi", "digits"]


@click.command(name="hensel")
@click.option("--p", type=int, required=True, help="Prime p = 1 mod 4.")
@click.option("--K", "big_k", type=int, required=True, help="Precision K.")
@common_options
@click.pass_context
@handle_errors
def hensel_cmd(ctx, **_):
    """
    Print xi with xi^2 + 1 = 0 mod p^K
    """
    config = resolve_config(ctx)
    root = hensel_sqrt_minus_one(config["p"], config["big_k"])
    if config.output:
        write_csv(
            config.output, HENSEL_HEADER, [(root.p, root.K, root.xi, root.digits)],
            config.comment_items(),
        )
    click.echo(root.xi)
