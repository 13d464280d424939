"""
Parsers for the text formats accepted on the command line
and in experiment config files.
"""
import re
from fractions import Fraction

from .exceptions import InvalidInput


def _entries(text):
    text = str(text).strip()
    if not text:
        raise InvalidInput("Expected a comma-separated list, got an empty string")
    return [entry.strip() for entry in text.split(",")]


def parse_rational(entry, position=None):
    """
    Parse "a" or "a/b" exactly, rejecting b = 0
    """
    numerator, slash, denominator = entry.strip().partition("/")
    try:
        numerator = int(numerator)
        denominator = int(denominator) if slash else 1
    except ValueError as err:
        raise InvalidInput("Malformed rational %r" % entry, position) from err
    if denominator == 0:
        raise InvalidInput("Zero denominator in %r" % entry, position)
    return Fraction(numerator, denominator)


def parse_rational_list(text):
    """
    Parse "a,b/c,..." into a list of ExactRationals.

    Positions in error messages count entries from 1.
    """
    return [
        parse_rational(entry, position)
        for position, entry in enumerate(_entries(text), start=1)
    ]


def parse_int_list(text):
    """
    Parse "1,2,3" into a list of ints
    """
    values = []
    for position, entry in enumerate(_entries(text), start=1):
        try:
            values.append(int(entry))
        except ValueError as err:
            raise InvalidInput("Malformed integer %r" % entry, position) from err
    return values


INDEX_PATTERN = re.compile(r"-?\d+(?:--?\d+)*")

# An entry starts at the beginning or right after a separating dash.
INDEX_ENTRY = re.compile(r"(?<!\d)-?\d+")


def parse_index(text):
    """
    Parse a dash-joined index tuple as written in CSV files: "2-0-1",
    or "-1-1-0" for (-1, 1, 0)
    """
    text = str(text).strip()
    if not INDEX_PATTERN.fullmatch(text):
        raise InvalidInput("Malformed index %r" % text)
    return tuple(int(entry) for entry in INDEX_ENTRY.findall(text))


def parse_float_list(text):
    """
    Parse "2,4,6.5" into a list of floats
    """
    values = []
    for position, entry in enumerate(_entries(text), start=1):
        try:
            values.append(float(entry))
        except ValueError as err:
            raise InvalidInput("Malformed number %r" % entry, position) from err
    return values


def parse_system(text):
    """
    Parse a phase system description:

      parabola | paraboloid | moment:<k> | trace:<minpoly>:<k>[:<normalization>]
      | file:<path of a phase-system CSV>
    """
    from ..models.field import MinimalPolynomial
    from ..models.phasesystem import PhaseSystem
    from ..tasks.algebra import expand_trace_phase, load_phase_system

    text = str(text).strip()
    if text.startswith("file:"):
        return load_phase_system(text[len("file:"):])
    parts = text.split(":")
    kind = parts[0]
    try:
        if kind == "parabola" and len(parts) == 1:
            return PhaseSystem.parabola()
        if kind == "paraboloid" and len(parts) == 1:
            return PhaseSystem.paraboloid()
        if kind == "moment" and len(parts) == 2:
            return PhaseSystem.moment_curve(int(parts[1]))
        if kind == "trace" and len(parts) in (3, 4):
            normalization = parts[3] if len(parts) == 4 else "content"
            return expand_trace_phase(
                MinimalPolynomial.parse(parts[1]), int(parts[2]), normalization
            )
    except ValueError as err:
        raise InvalidInput("Malformed phase system %r" % text) from err
    raise InvalidInput(
        "Unknown phase system %r; expected parabola, paraboloid, "
        "moment:<k>, trace:<minpoly>:<k> or file:<path>" % text
    )
