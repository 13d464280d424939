"""
Methods for saving / loading / retrieving settings between the
global settings singleton and the mvlab.cfg file.

The global settings singleton is imported inline when needed to avoid
circular dependencies.
"""
# pylint: disable=import-outside-toplevel
import os
from configparser import ConfigParser

from ...logs import logger
from ...utils.exceptions import InvalidSettings
from .model import SECTIONS

CONFIG_FILE_SECTION = "mvlab"


def load_settings(config_path=None):
    """
    :param config_path: Path to mvlab.cfg

    Sets default values for settings fields, then loads a settings file,
    e.g. /home/jsmith/.local/share/mvlab/mvlab.cfg
    """
    from ...conf import settings

    settings.set_default_config()

    if config_path is None:
        config_path = settings.config_path

    if config_path is not None and os.path.exists(config_path):
        logger.info("Reading settings from: " + config_path)
        config_parser = ConfigParser()
        config_parser.read(config_path)
        if config_parser.has_section(CONFIG_FILE_SECTION):
            for section in SECTIONS:
                load_section(settings.models[section], config_parser)


def load_section(model, config_parser):
    """
    :param model: One of the settings sections, e.g. settings.budgets
    :param config_parser: The ConfigParser object which stores data read from
                          mvlab.cfg

    Loads one section's fields from a ConfigParser object.
    """
    for field in model.fields:
        if config_parser.has_option(CONFIG_FILE_SECTION, field):
            value = config_parser.get(CONFIG_FILE_SECTION, field)
            try:
                model.set_from_string(field, value)
            except (TypeError, ValueError, ZeroDivisionError) as err:
                raise InvalidSettings(
                    "Invalid value %r for %s in mvlab.cfg" % (value, field), field
                ) from err


def save_settings_to_disk(config_path=None):
    """
    Save configuration to disk.
    """
    from ...conf import settings

    if config_path is None:
        config_path = settings.config_path
    if config_path is None:
        raise InvalidSettings("save_settings_to_disk called with config_path None")

    config_parser = ConfigParser()
    with open(config_path, "w") as config_file:
        config_parser.add_section(CONFIG_FILE_SECTION)
        for field in settings.fields:
            value = settings[field]
            config_parser.set(
                CONFIG_FILE_SECTION, field, "" if value is None else str(value)
            )
        config_parser.write(config_file)
    logger.info("Saved settings to " + config_path)
