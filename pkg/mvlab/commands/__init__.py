"""
Shared plumbing for mvlab commands: common options, experiment config
resolution and the mapping from exceptions to exit codes.
"""
import functools
import os
import sys
from collections import OrderedDict
from dataclasses import replace

import click
import inflect

from ..constants import SAMPLERS
from ..logs import logger
from ..models.coefficients import IndexDomain
from ..models.config import ExperimentConfig, read_config_file
from ..models.quadrature import QuadratureConfig
from ..models.scale import ScaleSpec
from ..utils import resolve_output_directory
from ..utils.csvfiles import write_csv
from ..utils.exceptions import InvalidInput, InvalidSettings, MvlabError
from ..utils.parsing import parse_system

INFLECT = inflect.engine()


def handle_errors(func):
    """
    Report mvlab exceptions on stderr and exit with their exit code
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except MvlabError as err:
            logger.error(str(err))
            click.echo("Error: %s" % err, err=True)
            sys.exit(err.exit_code)

    return wrapper


def common_options(func):
    """
    Options shared by every experiment command
    """
    options = [
        click.option("--seed", type=int, default=None, help="Random seed (default from settings)."),
        click.option(
            "--precision", type=int, default=None,
            help="Mantissa bits for unit roots (default from settings).",
        ),
        click.option("--threads", type=int, default=None, help="Worker threads."),
        click.option(
            "--output", type=click.Path(dir_okay=False), default=None,
            help="CSV output path (default <output dir>/<command>.csv).",
        ),
        click.option(
            "--config", "config_path", type=click.Path(exists=True, dir_okay=False),
            default=None, is_eager=True, callback=load_config_file,
            help="key=value file of option values.",
        ),
        click.option("--progress", is_flag=True, default=False, help="Show progress bars."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _option_keys(command):
    """
    {config file key: parameter} for every option of a command
    """
    keys = {}
    for param in command.params:
        if param.name == "config_path":
            continue
        keys[param.name] = param
        for opt in param.opts:
            keys[opt.lstrip("-").replace("-", "_")] = param
    return keys


def load_config_file(ctx, _param, value):
    """
    Eager --config callback: file values become the command's defaults,
    so flags given on the command line still win
    """
    if not value:
        return value
    keys = _option_keys(ctx.command)
    default_map = dict(ctx.default_map or {})
    try:
        for key, text in read_config_file(value).items():
            if key not in keys:
                raise InvalidSettings(
                    "Unknown key %r in %s for command %s" % (key, value, ctx.info_name), key
                )
            default_map[keys[key].name] = text
    except InvalidSettings as err:
        logger.error(str(err))
        click.echo("Error: %s" % err, err=True)
        ctx.exit(err.exit_code)
    ctx.default_map = default_map
    return value


def resolve_config(ctx):
    """
    Apply the run options to the settings singleton and return the
    ExperimentConfig
    """
    from ..conf import settings

    # Declaration order, whatever the order of the flags:
    params = OrderedDict(
        (param.name, ctx.params[param.name])
        for param in ctx.command.params
        if param.name in ctx.params
    )
    params.pop("config_path", None)
    seed = params.pop("seed", None)
    precision = params.pop("precision", None)
    threads = params.pop("threads", None)
    output = params.pop("output", None)
    progress = params.pop("progress", False)
    if seed is not None:
        settings.general.seed = seed
    if precision is not None:
        settings.general.precision = precision
    if threads is not None:
        settings.general.threads = threads
    from ..models.settings.validation import validate_settings

    validate_settings()
    labels = {
        param.name: param.opts[0].lstrip("-").replace("-", "_")
        for param in ctx.command.params
        if param.opts
    }
    return ExperimentConfig(
        command=ctx.info_name,
        params=params,
        labels=labels,
        seed=settings.seed,
        precision=settings.precision,
        threads=settings.threads,
        output=output,
        progress=bool(progress),
    )


def output_path(config):
    """
    --output, or <output dir>/<command>.csv
    """
    if config.output:
        return config.output
    from ..conf import settings

    directory = resolve_output_directory(settings.output_directory)
    return os.path.join(directory, "%s.csv" % config.command)


def emit(config, header, rows):
    """
    Write the command's CSV with the config comment line; returns the path
    """
    path = output_path(config)
    write_csv(path, header, rows, config.comment_items())
    logger.info("Wrote %s" % path)
    return path


def system_option(default="parabola"):
    return click.option(
        "--system", default=default, show_default=True,
        help=(
            "parabola, paraboloid, moment:<k>, trace:<minpoly>:<k>[:<normalization>]"
            " or file:<phase-system csv>"
        ),
    )


def scale_options(func):
    """
    --p, --K and --sigma
    """
    options = [
        click.option("--p", type=int, required=True, help="Prime p."),
        click.option("--K", "big_k", type=int, required=True, help="N = p^K."),
        click.option(
            "--sigma", default="0", show_default=True,
            help="Comma list of rationals, one per component (a single 0 for all zeros).",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def coefficient_options(func):
    """
    --sampler, --index and --coefficients
    """
    options = [
        click.option(
            "--sampler", type=click.Choice(SAMPLERS), default="all-ones", show_default=True,
        ),
        click.option("--index", "sample_index", type=int, default=0, help="Sample index."),
        click.option(
            "--coefficients", type=click.Path(exists=True, dir_okay=False), default=None,
            help="CSV of (index, real, imag) rows; overrides --sampler.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def quadrature_options(func):
    """
    --nodes, --depth and --tolerance, defaulting to the quadrature settings
    """
    options = [
        click.option("--nodes", type=int, default=None, help="Gauss-Legendre nodes per axis."),
        click.option("--depth", type=int, default=None, help="Dyadic subdivision depth."),
        click.option("--tolerance", type=float, default=None, help="Relative tolerance."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def quadrature_config(config):
    """
    QuadratureConfig from settings, overridden by --nodes/--depth/--tolerance
    """
    quad = QuadratureConfig.from_settings()
    overrides = {
        key: config.get(key)
        for key in ("nodes", "depth", "tolerance")
        if config.get(key) is not None
    }
    return replace(quad, **overrides) if overrides else quad


def experiment_inputs(config):
    """
    (system, scale, sigma, omega, a) for the mean-value commands
    """
    from ..tasks.domains import parse_sigma
    from ..tasks.samplers import load_coefficients, sample_coefficients

    system = parse_system(config["system"])
    scale = ScaleSpec(config["p"], config["big_k"])
    sigma = parse_sigma(config["sigma"], system.k)
    if config.get("coefficients"):
        a = load_coefficients(config["coefficients"], scale.N)
        if a.domain.d != system.variables:
            raise InvalidInput(
                "Coefficients are indexed by %s-tuples but %s has %s variables"
                % (a.domain.d, system.name, system.variables)
            )
        omega = a.domain
    else:
        omega = IndexDomain.box(scale.N, system.variables)
        a = sample_coefficients(
            config.get("sampler", "all-ones"), omega, config.seed,
            config.get("sample_index", 0),
        )
    return system, scale, sigma, omega, a


def sampler_name(config):
    return "file" if config.get("coefficients") else config.get("sampler", "all-ones")


def plural(count, noun):
    return "%s %s" % (count, INFLECT.plural(noun, count))


def summary(count, noun, path):
    """
    "Wrote 5 traces to traces.csv"
    """
    return "Wrote %s to %s" % (plural(count, noun), path)
