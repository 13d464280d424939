"""
Model for the quadrature used by real sparse mean values.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class QuadratureConfig:
    """
    nodes: Gauss-Legendre order m per axis and subcell
    depth: dyadic subdivision depth on every axis, or None to choose
           the smallest depth keeping the integrand's variation across
           a subcell below `variation` periods
    tolerance: relative slack of the transference check
    """

    nodes: int = 4
    depth: Optional[int] = None
    variation: Fraction = Fraction(1, 4)
    tolerance: float = 1e-6

    @classmethod
    def from_settings(cls, settings=None):
        if settings is None:
            from ..conf import settings
        return cls(
            nodes=settings.quadrature.nodes,
            depth=settings.quadrature.depth,
            variation=settings.quadrature.variation,
            tolerance=settings.quadrature.tolerance,
        )
