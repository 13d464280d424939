"""
tests/utils.py
"""
import sys


def unload_modules():
    """Unload modules - called at the end of a test

    Required because mvlab makes use of singletons,
    in particular settings which makes sense in a normal
    mvlab run but not in a series of unit tests.
    """
    sys_modules = list(sys.modules.keys())
    for module in sys_modules:
        if "mvlab" in module:
            del sys.modules[module]


def read_rows(path):
    """
    (comment line, header, data rows) of a CSV written by mvlab
    """
    with open(path, encoding="utf-8") as csvfile:
        lines = csvfile.read().splitlines()
    return lines[0], lines[1].split(","), lines[2:]
