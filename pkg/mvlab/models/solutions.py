"""
Models for Vinogradov solution counts and growth fits.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from .field import MinimalPolynomial


class CountingMethod:
    """
    Enumerated data type for counting methods.
    """

    HASH = "hash"

    BRUTE = "brute"

    # alpha treated as a formal (transcendental) variable:
    FORMAL = "formal"


@dataclass(frozen=True)
class SolutionCountRecord:
    """
    J_{s,k,d}(N; alpha) for one (P, s, k, N)
    """

    s: int
    k: int
    N: int  # pylint: disable=invalid-name
    minpoly: MinimalPolynomial
    J: int  # pylint: disable=invalid-name
    method: str
    seconds: Optional[float] = None
    # Per power t, the integer that cleared denominators of the t-th key block:
    key_scales: Tuple[int, ...] = ()

    @property
    def d(self):
        return self.minpoly.degree

    @property
    def diagonal(self):
        """
        N^{ds}, the number of solutions with n = m
        """
        return self.N ** (self.d * self.s)


@dataclass(frozen=True)
class GrowthFit:
    """
    Least-squares slope of log J against log N
    """

    records: Tuple[SolutionCountRecord, ...]
    slope: float
    intercept: float
    residuals: Tuple[float, ...]
    envelope_exponent: int
