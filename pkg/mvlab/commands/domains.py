"""
Commands for sparse domains
"""
import click

from ..tasks.domains import build_domain, emit_cell_csv, parse_sigma
from ..models.scale import ScaleSpec
from ..utils.parsing import parse_system
from . import (
    common_options, handle_errors, output_path, resolve_config, scale_options, summary,
    system_option,
)


@click.command(name="domain-cells")
@system_option()
@scale_options
@common_options
@click.pass_context
@handle_errors
def domain_cells_cmd(ctx, **_):
    """
    Write the cells of the sparse domain (index, center, half-width)
    """
    config = resolve_config(ctx)
    system = parse_system(config["system"])
    scale = ScaleSpec(config["p"], config["big_k"])
    domain = build_domain(scale, parse_sigma(config["sigma"], system.k), system.degrees)
    path = output_path(config)
    count = emit_cell_csv(domain, path, config.comment_items())
    click.echo("%s (measure %s)" % (summary(count, "cell", path), domain.measure))
