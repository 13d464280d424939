"""
Exact rationals and phases modulo 1.

ExactRational is fractions.Fraction: numerator and denominator are
arbitrary-precision integers, always stored in lowest terms with a
positive denominator.
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ..utils.exceptions import InvalidInput

ExactRational = Fraction

# Values of exponential sums in bulk kernels are plain Python / numpy
# complex numbers; unit_root returns an mpmath.mpc at working precision.
ComplexValue = complex


def as_rational(value):
    """
    Convert an int, Fraction, float or "a/b" string into an ExactRational.

    Floats convert exactly (to their binary rational value).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    text = str(value).strip()
    try:
        numerator, _, denominator = text.partition("/")
        if denominator:
            if int(denominator) == 0:
                raise InvalidInput("Zero denominator in %r" % text)
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(numerator))
    except ValueError as err:
        raise InvalidInput("Malformed rational %r" % text) from err


def format_rational(value):
    """
    Format an ExactRational as "a" or "a/b"
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%s/%s" % (value.numerator, value.denominator)


@dataclass(frozen=True)
class PhaseFraction:
    """
    A rational phase reduced modulo 1, i.e. the argument of e(q) = exp(2 pi i q).

    Arithmetic is exact: sums and integer multiples are reduced again
    modulo 1 on integer numerators.
    """

    value: Fraction = Fraction(0)

    def __post_init__(self):
        value = Fraction(self.value)
        object.__setattr__(
            self, "value", Fraction(value.numerator % value.denominator, value.denominator)
        )

    @classmethod
    def of(cls, value):
        """
        Reduce any rational modulo 1
        """
        return cls(as_rational(value))

    @property
    def numerator(self):
        return self.value.numerator

    @property
    def denominator(self):
        return self.value.denominator

    def __add__(self, other):
        if isinstance(other, PhaseFraction):
            other = other.value
        return PhaseFraction(self.value + as_rational(other))

    __radd__ = __add__

    def __neg__(self):
        return PhaseFraction(-self.value)

    def __sub__(self, other):
        if isinstance(other, PhaseFraction):
            other = other.value
        return PhaseFraction(self.value - as_rational(other))

    def __mul__(self, multiple):
        if not isinstance(multiple, int):
            return NotImplemented
        return PhaseFraction(self.value * multiple)

    __rmul__ = __mul__

    def __str__(self):
        return format_rational(self.value)
