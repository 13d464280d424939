"""
Model for the family f_n of the p-adic paraboloid counterexample.
"""
from dataclasses import dataclass

from ..utils.exceptions import InvalidInput
from .scale import HenselRoot, ScaleSpec


@dataclass(frozen=True)
class CounterexampleFamily:
    """
    f_n(x) = 1_{p^{-2k} Z_p^3}(x) chi_p(x . (n xi, n, 0)) for 0 <= n < N,
    with N = p^k and xi a square root of -1 modulo N^2.

    xi may be replaced (see with_xi) to model a broken lift.
    """

    scale: ScaleSpec
    xi: HenselRoot
    r: float

    def __post_init__(self):
        if self.r < 2:
            raise InvalidInput("r must be at least 2, not %s" % self.r)
        if self.xi.p != self.scale.p or self.xi.K != 2 * self.scale.K:
            raise InvalidInput("xi must be a lift modulo N^2 = p^%s" % (2 * self.scale.K))

    @property
    def N(self):  # pylint: disable=invalid-name
        return self.scale.N

    @property
    def modulus(self):
        """
        N^2, the denominator of every phase
        """
        return self.scale.N ** 2

    def with_xi(self, xi):
        return CounterexampleFamily(
            self.scale, HenselRoot(self.xi.p, self.xi.K, xi % self.modulus), self.r
        )
