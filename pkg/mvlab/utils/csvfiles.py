"""
CSV output shared by the commands.

Every file starts with a "#"-prefixed comment line recording the
resolved experiment config, followed by a header row.
"""
import csv
import numbers
import os
from fractions import Fraction

from ..models.rational import format_rational


def format_value(value):
    """
    Format a cell: exact rationals as "a/b", floats with repr
    (shortest round-trip form), None as an empty cell
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return repr(float(value))
    if isinstance(value, (tuple, list)):
        return "-".join(format_value(item) for item in value)
    return str(value)


def config_comment(config):
    """
    "# key=value; key=value" for an ordered mapping
    """
    return "# " + "; ".join(
        "%s=%s" % (key, format_value(value)) for key, value in config.items()
    )


def write_csv(path, header, rows, config=None):
    """
    Write a CSV file with an optional config comment line and a header row
    """
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, "w", newline="", encoding="utf-8") as csvfile:
        if config is not None:
            csvfile.write(config_comment(config) + "\n")
        writer = csv.writer(csvfile, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
    return path


def read_csv(path):
    """
    Read rows (as dicts) from a CSV file, skipping "#" comment lines
    """
    with open(path, newline="", encoding="utf-8") as csvfile:
        lines = [line for line in csvfile if not line.startswith("#")]
    return list(csv.DictReader(lines))
