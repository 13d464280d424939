"""
Model for resolved experiment configs: the command, its parameters and
the common run options, as recorded in every CSV comment line.
"""
from collections import OrderedDict
from configparser import ConfigParser, Error as ConfigParserError
from dataclasses import dataclass, field
from typing import Optional

from ..utils.exceptions import InvalidSettings

CONFIG_FILE_SECTION = "experiment"

# Run options which must not change CSV bytes:
COMMENT_EXCLUDED = ("threads", "progress", "output", "config")


def read_config_file(path):
    """
    Read a line-oriented key=value file into an ordered {key: text} map.
    Keys keep their case, with dashes mapped to underscores.
    """
    parser = ConfigParser(interpolation=None, comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        with open(path, encoding="utf-8") as config_file:
            parser.read_string("[%s]\n%s" % (CONFIG_FILE_SECTION, config_file.read()))
    except OSError as err:
        raise InvalidSettings("Cannot read config file %s: %s" % (path, err)) from err
    except ConfigParserError as err:
        raise InvalidSettings("Malformed config file %s: %s" % (path, err)) from err
    return OrderedDict(
        (key.strip().replace("-", "_"), value.strip())
        for key, value in parser.items(CONFIG_FILE_SECTION)
    )


@dataclass
class ExperimentConfig:
    """
    A fully resolved experiment: flags override config file values,
    which override defaults
    """

    command: str
    params: OrderedDict = field(default_factory=OrderedDict)
    seed: int = 0
    precision: int = 64
    threads: int = 1
    output: Optional[str] = None
    progress: bool = False
    # Parameter name -> flag name, e.g. big_k -> K:
    labels: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.params[key]

    def get(self, key, default=None):
        return self.params.get(key, default)

    def comment_items(self):
        """
        What the CSV comment line records
        """
        items = OrderedDict(command=self.command)
        for key, value in self.params.items():
            if key not in COMMENT_EXCLUDED:
                items[self.labels.get(key, key)] = value
        items["seed"] = self.seed
        items["precision"] = self.precision
        return items
