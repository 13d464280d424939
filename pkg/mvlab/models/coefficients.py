"""
Models for the index domain Omega and coefficient vectors {a_n}.
"""
from dataclasses import dataclass
from itertools import product
from typing import Tuple

import numpy as np

from ..utils.exceptions import InvalidInput
from .rational import PhaseFraction


@dataclass(frozen=True)
class IndexDomain:
    """
    A finite set Omega of integer d-tuples, with the bounding scale N
    """

    points: Tuple[Tuple[int, ...], ...]
    N: int  # pylint: disable=invalid-name

    def __post_init__(self):
        points = tuple(tuple(int(x) for x in point) for point in self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise InvalidInput("The index domain must not be empty")
        if len(set(points)) != len(points):
            raise InvalidInput("The index domain contains duplicate points")
        if len({len(point) for point in points}) != 1:
            raise InvalidInput("Index domain points have mixed dimensions")

    @classmethod
    def box(cls, N, d):  # pylint: disable=invalid-name
        """
        The half-open box [0, N)^d, in lexicographic order
        """
        return cls(tuple(product(range(N), repeat=d)), N)

    @property
    def d(self):
        return len(self.points[0])

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def position(self, point):
        """
        Position of a point in the domain's ordering
        """
        try:
            return self.points.index(tuple(point))
        except ValueError as err:
            raise InvalidInput("%s is not in the index domain" % (tuple(point),)) from err


class CoefficientVector:
    """
    Complex coefficients a_n over an IndexDomain.

    Each entry is held as base[n] * e(phase[n]) with the phase an exact
    PhaseFraction, so modulations never change |a_n|.
    """

    def __init__(self, domain, base, phases=None):
        self.domain = domain
        self.base = np.asarray(base, dtype=np.complex128).copy()
        if self.base.shape != (len(domain),):
            raise InvalidInput(
                "Expected %s coefficients, got %s" % (len(domain), self.base.shape[0])
            )
        if phases is None:
            phases = (PhaseFraction(),) * len(domain)
        self.phases = tuple(phases)
        if len(self.phases) != len(domain):
            raise InvalidInput("Expected %s phases" % len(domain))
        self.base.setflags(write=False)

    @classmethod
    def from_mapping(cls, domain, entries):
        """
        Build from {point: value}; points missing from the mapping are 0
        """
        base = np.zeros(len(domain), dtype=np.complex128)
        for point, value in entries.items():
            base[domain.position(point)] = complex(value)
        return cls(domain, base)

    @classmethod
    def constant(cls, domain, value=1):
        return cls(domain, np.full(len(domain), complex(value)))

    def __len__(self):
        return len(self.domain)

    @property
    def is_unmodulated(self):
        return all(phase.value == 0 for phase in self.phases)

    def values(self):
        """
        The entries a_n as a complex128 array, in domain order
        """
        from ..tasks.exact import unit_root

        if self.is_unmodulated:
            return np.array(self.base)
        rotations = np.array([complex(unit_root(phase)) for phase in self.phases])
        return self.base * rotations

    def values_mp(self, precision):
        """
        The entries a_n as mpmath.mpc, with each phase evaluated at
        `precision` bits
        """
        import mpmath

        from ..tasks.exact import unit_root

        with mpmath.workprec(precision):
            return [
                mpmath.mpc(complex(base)) * unit_root(phase, precision)
                for base, phase in zip(self.base, self.phases)
            ]

    def __getitem__(self, point):
        return self.values()[self.domain.position(point)]

    def moduli(self):
        """
        |a_n|, independent of the phases
        """
        return np.abs(self.base)

    def norm_power(self, r):
        """
        sum_n |a_n|^r
        """
        return float(np.sum(self.moduli() ** r))

    def scaled(self, factor):
        return CoefficientVector(self.domain, self.base * complex(factor), self.phases)

    def with_phases(self, phases):
        return CoefficientVector(self.domain, self.base, phases)

    def support(self):
        return [point for point, value in zip(self.domain, self.base) if value != 0]
