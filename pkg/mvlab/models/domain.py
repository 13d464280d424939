"""
Models for the sparse subdomains A_p^(N, sigma; P) of the torus R^k / Z^k:
unions of equally spaced product cells, one cell per index tuple iota.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Tuple

from .rational import as_rational
from .scale import LocalizationVector, ScaleSpec


@dataclass(frozen=True)
class Cell:
    """
    One cell: index tuple, exact center and exact halfwidths
    """

    index: Tuple[int, ...]
    center: Tuple[Fraction, ...]
    halfwidth: Tuple[Fraction, ...]

    @property
    def volume(self):
        return prod((2 * h for h in self.halfwidth), start=Fraction(1))


@dataclass(frozen=True)
class SparseDomain:
    """
    Descriptor of a sparse subdomain, built by
    mvlab.tasks.domains.build_domain.

    Axis j holds cell_counts[j] = N^{|e_j| - sigma_j} cells of width
    N^{-|e_j|}, with centers spaced N^{sigma_j - |e_j|} apart.
    """

    scale: ScaleSpec
    sigma: LocalizationVector
    degrees: Tuple[int, ...]
    cell_counts: Tuple[int, ...]
    cell_halfwidths: Tuple[Fraction, ...]

    @property
    def k(self):
        return len(self.degrees)

    @property
    def spacings(self):
        """
        Distance between adjacent centers on each axis
        """
        return tuple(Fraction(1, count) for count in self.cell_counts)

    @property
    def total_cells(self):
        return prod(self.cell_counts)

    @property
    def cell_volume(self):
        return prod((2 * h for h in self.cell_halfwidths), start=Fraction(1))

    @property
    def measure(self):
        """
        Total measure, equal to N^{-sum sigma_j}
        """
        return self.total_cells * self.cell_volume

    def center(self, index):
        return tuple(i * spacing for i, spacing in zip(index, self.spacings))

    def cell(self, index):
        return Cell(tuple(index), self.center(index), self.cell_halfwidths)

    def locate(self, point):
        """
        Index tuple of the cell containing a point of the torus, or None.

        Cells are half-open: [center - h, center + h) on each axis,
        read modulo 1.
        """
        index = []
        for x, h, spacing in zip(point, self.cell_halfwidths, self.spacings):
            shifted = (as_rational(x) + h) % 1
            position, offset = divmod(shifted, spacing)
            if offset >= 2 * h:
                return None
            index.append(int(position))
        return tuple(index)

    def contains(self, point):
        """
        True if the point lies in the domain (modulo 1)
        """
        return self.locate(point) is not None
