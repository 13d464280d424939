"""
Commands for querying and updating settings in mvlab.cfg
"""
import sys

import click

from ..conf import settings
from ..models.settings.serialize import save_settings_to_disk
from ..models.settings.validation import validate_settings
from ..utils.exceptions import InvalidSettings
from . import handle_errors


@click.group(name="config")
def config_cmd():
    """
    Query or update settings in mvlab.cfg
    """


@config_cmd.command()
def discover():
    """
    Display location of mvlab.cfg
    """
    click.echo(settings.config_path)


@config_cmd.command(name="list")
def list_command():
    """
    List keys and values, including defaults not yet saved to mvlab.cfg
    """
    for key in sorted(settings.fields):
        value = settings[key]
        click.echo("%s = %s" % (key, "" if value is None else value))


@config_cmd.command()
@click.argument("key")
@handle_errors
def get(key):
    """
    Get value from mvlab.cfg
    """
    if key not in settings.fields:
        raise InvalidSettings("%s was not found in settings." % key, key)
    value = settings[key]
    click.echo("" if value is None else value)


@config_cmd.command(name="set")
@click.argument("key")
@click.argument("value")
@handle_errors
def set_command(key, value):
    """
    Set value in mvlab.cfg
    """
    if key not in settings.fields:
        raise InvalidSettings(
            "%s was not found in settings." % key, key,
            suggestion="Run `mvlab config list` for the known keys.",
        )
    section = settings.section_for_field(key)
    previous = settings[key]
    try:
        section.set_from_string(key, value)
        validate_settings()
    except (TypeError, ValueError, ZeroDivisionError, InvalidSettings) as err:
        section.mvlab_config[key] = previous
        click.echo("Invalid value %r for %s: %s" % (value, key, err), err=True)
        sys.exit(InvalidSettings.exit_code)
    save_settings_to_disk()
