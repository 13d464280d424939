"""
Models for the number field L = Q(alpha): the minimal polynomial
of alpha and elements of L as coordinate vectors over 1, alpha, ...
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Tuple

from sympy import divisors

from ..utils.exceptions import InvalidInput
from .rational import as_rational, format_rational


def _rational_root(coefficients):
    """
    Return a rational root of the monic polynomial
    x^d + c_{d-1} x^{d-1} + ... + c_0, or None.

    Substituting x = y / D, with D the common denominator of the c_i,
    gives a monic integer polynomial in y, whose rational roots are
    integers dividing its constant term.
    """
    degree = len(coefficients)
    if coefficients[0] == 0:
        return Fraction(0)
    common = lcm(*(c.denominator for c in coefficients))
    # y^d + sum_i c_i D^(d-i) y^i
    scaled = [c * common ** (degree - i) for i, c in enumerate(coefficients)]
    scaled = [int(c) for c in scaled] + [1]
    for divisor in divisors(abs(scaled[0])):
        for candidate in (divisor, -divisor):
            value = 0
            for coefficient in reversed(scaled):
                value = value * candidate + coefficient
            if value == 0:
                return Fraction(candidate, common)
    return None


@dataclass(frozen=True)
class MinimalPolynomial:
    """
    P(x) = x^d + c_{d-1} x^{d-1} + ... + c_0, stored as the ascending
    coefficients (c_0, ..., c_{d-1}); the leading 1 is implicit.

    Irreducibility is asserted by the caller.  Only the necessary
    condition "no rational root" is checked, for d > 1.
    """

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coefficients = tuple(as_rational(c) for c in self.coefficients)
        if not coefficients:
            raise InvalidInput("A minimal polynomial needs degree d >= 1")
        object.__setattr__(self, "coefficients", coefficients)
        if len(coefficients) > 1:
            root = _rational_root(coefficients)
            if root is not None:
                raise InvalidInput(
                    "Minimal polynomial %s is reducible: it has the rational root %s"
                    % (self, format_rational(root))
                )

    @classmethod
    def parse(cls, text):
        """
        Parse the text format "c_0,c_1,...,c_{d-1}" (rationals as "a/b")
        """
        from ..utils.parsing import parse_rational_list

        return cls(tuple(parse_rational_list(text)))

    @property
    def degree(self):
        return len(self.coefficients)

    @property
    def is_integral(self):
        """
        True if P has integer coefficients
        """
        return all(c.denominator == 1 for c in self.coefficients)

    def format(self):
        """
        The comma-separated text format, as accepted by parse
        """
        return ",".join(format_rational(c) for c in self.coefficients)

    def __str__(self):
        terms = ["x^%s" % self.degree if self.degree > 1 else "x"]
        for power in range(self.degree - 1, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue
            sign = "-" if coefficient < 0 else "+"
            magnitude = format_rational(abs(coefficient))
            if power == 0:
                terms.append("%s %s" % (sign, magnitude))
            else:
                monomial = "x" if power == 1 else "x^%s" % power
                if abs(coefficient) != 1:
                    monomial = magnitude + monomial
                terms.append("%s %s" % (sign, monomial))
        return " ".join(terms)


@dataclass(frozen=True)
class FieldElement:
    """
    An element of Q(alpha), as coordinates with respect to the power
    basis 1, alpha, ..., alpha^{d-1}.
    """

    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    @classmethod
    def one(cls, degree):
        return cls((1,) + (0,) * (degree - 1))

    @classmethod
    def generator(cls, degree):
        """
        alpha itself (or, for d = 1, the rational alpha is not
        representable by a basis vector, so callers use trace_power)
        """
        if degree == 1:
            raise InvalidInput("alpha is not a basis vector when d = 1")
        return cls((0, 1) + (0,) * (degree - 2))

    @property
    def degree(self):
        return len(self.coords)

    def __add__(self, other):
        if self.degree != other.degree:
            raise InvalidInput("Degree mismatch: %s != %s" % (self.degree, other.degree))
        return FieldElement(tuple(a + b for a, b in zip(self.coords, other.coords)))
