"""
Model class for the quadrature settings saved to disk in mvlab.cfg
"""
from fractions import Fraction

from .base import BaseSettings


def _optional_int(value):
    value = str(value).strip()
    return int(value) if value not in ("", "None", "auto") else None


class QuadratureSettings(BaseSettings):
    """
    Model class for the quadrature settings saved to disk in mvlab.cfg
    """

    def __init__(self):
        super().__init__()

        self.fields = [
            "nodes",
            "depth",
            "variation",
            "tolerance",
        ]

        self.default = dict(
            nodes=4,
            depth=None,
            variation=Fraction(1, 4),
            tolerance=1e-6,
        )

        self.converters = dict(
            nodes=int, depth=_optional_int, variation=Fraction, tolerance=float
        )

    @property
    def nodes(self):
        """
        Gauss-Legendre nodes per axis on each subcell
        """
        return int(self.mvlab_config["nodes"])

    @nodes.setter
    def nodes(self, nodes):
        self.mvlab_config["nodes"] = nodes

    @property
    def depth(self):
        """
        Dyadic subdivision depth, or None to choose it per axis
        from the phase variation bound
        """
        return self.mvlab_config["depth"]

    @depth.setter
    def depth(self, depth):
        self.mvlab_config["depth"] = depth

    @property
    def variation(self):
        """
        Largest phase variation (in periods) allowed across a subcell
        """
        return Fraction(self.mvlab_config["variation"])

    @variation.setter
    def variation(self, variation):
        self.mvlab_config["variation"] = variation

    @property
    def tolerance(self):
        """
        Relative tolerance of the transference check
        """
        return float(self.mvlab_config["tolerance"])

    @tolerance.setter
    def tolerance(self, tolerance):
        self.mvlab_config["tolerance"] = tolerance
