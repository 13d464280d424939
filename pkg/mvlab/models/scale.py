"""
Models for p-adic scales N = p^K, localization vectors sigma and
Hensel lifts of square roots of -1.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from sympy import isprime

from ..utils.exceptions import InvalidInput
from .rational import as_rational, format_rational


@dataclass(frozen=True)
class ScaleSpec:
    """
    A scale N = p^K with p prime and K >= 1
    """

    p: int
    K: int

    def __post_init__(self):
        if not isprime(self.p):
            raise InvalidInput("%s is not prime" % self.p)
        if self.K < 1:
            raise InvalidInput("K must be a positive integer, not %s" % self.K)

    @property
    def N(self):  # pylint: disable=invalid-name
        return self.p ** self.K

    def power(self, exponent):
        """
        N^exponent for a rational exponent with exponent * K an integer,
        as an ExactRational
        """
        exponent = as_rational(exponent) * self.K
        if exponent.denominator != 1:
            raise InvalidInput(
                "N^%s is not a power of %s" % (format_rational(exponent / self.K), self.p)
            )
        return Fraction(self.p) ** int(exponent)


@dataclass(frozen=True)
class LocalizationVector:
    """
    sigma = (sigma_1, ..., sigma_k); validated against a scale and the
    component degrees by mvlab.tasks.domains.build_domain
    """

    sigma: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(as_rational(s) for s in self.sigma))

    @classmethod
    def zero(cls, k):
        return cls((0,) * k)

    def __len__(self):
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    @property
    def total(self):
        return sum(self.sigma, Fraction(0))

    def format(self):
        return ",".join(format_rational(s) for s in self.sigma)


@dataclass(frozen=True)
class HenselRoot:
    """
    xi in [0, p^K) with xi^2 + 1 = 0 mod p^K
    """

    p: int
    K: int
    xi: int

    @property
    def modulus(self):
        return self.p ** self.K

    @property
    def digits(self):
        """
        Base-p digits b_0, ..., b_{K-1} with xi = sum b_n p^n
        """
        digits = []
        value = self.xi
        for _ in range(self.K):
            value, digit = divmod(value, self.p)
            digits.append(digit)
        return tuple(digits)

    def reduce(self, precision):
        """
        The lift at a lower precision K' <= K
        """
        if not 1 <= precision <= self.K:
            raise InvalidInput(
                "Cannot reduce a lift of precision %s to %s" % (self.K, precision)
            )
        return HenselRoot(self.p, precision, self.xi % self.p ** precision)
