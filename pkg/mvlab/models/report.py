"""
Models for the results of mean-value computations.
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple


class MeanValueMethod:
    """
    Enumerated data type for mean-value methods.
    """

    PADIC_EXACT = "padic-exact"

    REAL_QUADRATURE = "real-quadrature"

    # sigma = 0: the cells tile the torus and an even power is averaged
    # exactly over a grid
    REAL_TORUS = "real-torus"


NORMALIZATION_NOTE = "includes the N^(sum sigma_j) prefactor"


@dataclass(frozen=True)
class MeanValueReport:
    """
    A computed mean value.

    padic-exact reports always have quadrature_error_bound == 0.
    """

    value: float
    r: float
    method: str
    quadrature_error_bound: float = 0.0
    normalization: str = NORMALIZATION_NOTE
    cells: int = 0
    nodes: int = 0
    depths: Tuple[int, ...] = ()
    # Decimal value at the working precision, for precisions above 64 bits
    value_text: Optional[str] = None

    def __post_init__(self):
        if self.method == MeanValueMethod.PADIC_EXACT and self.quadrature_error_bound:
            raise ValueError("Exact p-adic mean values carry no quadrature error")
        # Rounding can leave a tiny negative value for a ~ 0.
        if self.value < 0:
            object.__setattr__(self, "value", 0.0)


@dataclass(frozen=True)
class TransferReport:
    """
    Result of comparing a real mean value with p-adic mean values of
    modulated coefficients.
    """

    real_value: float
    padic_sup_over_grid: float
    padic_at_zero: float
    quadrature_error_bound: float
    tolerance: float
    grid_size: int

    @property
    def passed(self):
        return self.real_value <= (
            (1 + self.tolerance) * self.padic_sup_over_grid + self.quadrature_error_bound
        )


@dataclass(frozen=True)
class SampleResult:
    """
    One sampled coefficient vector's contribution to a restriction estimate
    """

    sampler: str
    seed: int
    index: int
    value: float
    denominator: float
    error_bound: float = 0.0

    @property
    def ratio(self):
        return self.value / self.denominator if self.denominator else 0.0


@dataclass(frozen=True)
class RestrictionEstimate:
    """
    max over sampled a of value(a) / sum |a_n|^r, a lower bound for the
    optimal restriction constant, with the maximizing sample
    """

    side: str
    r: float
    samples: Tuple[SampleResult, ...] = field(default_factory=tuple)

    @property
    def best(self) -> Optional[SampleResult]:
        if not self.samples:
            return None
        best = self.samples[0]
        for sample in self.samples[1:]:
            if sample.ratio > best.ratio:
                best = sample
        return best

    @property
    def estimate(self):
        best = self.best
        return best.ratio if best else 0.0

    @property
    def sampler(self):
        best = self.best
        return best.sampler if best else ""


@dataclass(frozen=True)
class CanonicalCheck:
    """
    Canonical-scale (sigma = 0) comparison for the moment curve with a = 1:
    the p-adic mean value counts solutions of the system of congruences
    modulo N^j, J counts integer solutions (the real torus integral), and
    envelope is (1 + N^{s - k(k+1)}) N^s.
    """

    k: int
    N: int  # pylint: disable=invalid-name
    s: int
    padic_value: float
    J: int  # pylint: disable=invalid-name
    envelope: float

    @property
    def congruence_count(self):
        return int(round(self.padic_value))

    @property
    def consistent(self):
        """
        Every integer solution is a solution of the congruences
        """
        return self.congruence_count >= self.J
