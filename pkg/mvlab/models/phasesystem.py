"""
Models for phase systems: vectors P = (P_1, ..., P_k) of homogeneous
polynomials in d variables n_0, ..., n_{d-1}.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..utils.exceptions import InvalidInput
from .rational import as_rational, format_rational


@dataclass(frozen=True)
class MonomialTerm:
    """
    coefficient * n_0^{e_0} * ... * n_{d-1}^{e_{d-1}}
    """

    multiindex: Tuple[int, ...]
    coefficient: Fraction

    def __post_init__(self):
        object.__setattr__(self, "multiindex", tuple(int(e) for e in self.multiindex))
        object.__setattr__(self, "coefficient", as_rational(self.coefficient))
        if self.coefficient == 0:
            raise InvalidInput("Monomial terms must have nonzero coefficients")
        if any(e < 0 for e in self.multiindex):
            raise InvalidInput("Negative exponent in %s" % (self.multiindex,))

    @property
    def degree(self):
        return sum(self.multiindex)

    def evaluate(self, point):
        value = self.coefficient
        for base, exponent in zip(point, self.multiindex):
            value *= base ** exponent
        return value


@dataclass(frozen=True)
class PhaseComponent:
    """
    One homogeneous component P_j, of total degree |e_j|.

    scale records the rational divided out during normalization:
    raw component = scale * this component.  label is (j, l) for
    trace-expanded systems and None otherwise.
    """

    degree: int
    terms: Tuple[MonomialTerm, ...]
    scale: Fraction = Fraction(1)
    label: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "scale", as_rational(self.scale))
        if self.degree < 1:
            raise InvalidInput("Phase components need positive degree")
        for term in self.terms:
            if term.degree != self.degree:
                raise InvalidInput(
                    "Term %s has degree %s in a component of degree %s"
                    % (term.multiindex, term.degree, self.degree)
                )

    @property
    def is_integral(self):
        return all(term.coefficient.denominator == 1 for term in self.terms)

    def coefficient_map(self):
        """
        {multiindex: coefficient}, convenient for comparing components
        regardless of term order
        """
        return {term.multiindex: term.coefficient for term in self.terms}

    def evaluate(self, point):
        """
        Exact value at an integer (or rational) point
        """
        return sum((term.evaluate(point) for term in self.terms), Fraction(0))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for term in self.terms:
            monomial = "*".join(
                "n%s" % i if e == 1 else "n%s^%s" % (i, e)
                for i, e in enumerate(term.multiindex)
                if e
            )
            coefficient = term.coefficient
            text = monomial
            if abs(coefficient) != 1:
                text = "%s*%s" % (format_rational(abs(coefficient)), monomial)
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, text))
        first_sign, first_text = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_text
        for sign, piece in pieces[1:]:
            text += " %s %s" % (sign, piece)
        return text


@dataclass(frozen=True)
class PhaseSystem:
    """
    The phase vector P = (P_1, ..., P_k) in `variables` = d unknowns.
    """

    variables: int
    components: Tuple[PhaseComponent, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.variables < 1:
            raise InvalidInput("A phase system needs at least one variable")
        if not self.components:
            raise InvalidInput("A phase system needs at least one component")
        for component in self.components:
            for term in component.terms:
                if len(term.multiindex) != self.variables:
                    raise InvalidInput(
                        "Multiindex %s does not have length %s"
                        % (term.multiindex, self.variables)
                    )

    @classmethod
    def moment_curve(cls, k):
        """
        (n, n^2, ..., n^k)
        """
        if k < 1:
            raise InvalidInput("The moment curve needs k >= 1")
        return cls(
            1,
            tuple(
                PhaseComponent(j, (MonomialTerm((j,), 1),)) for j in range(1, k + 1)
            ),
            name="moment:%s" % k,
        )

    @classmethod
    def parabola(cls):
        """
        (n, n^2)
        """
        system = cls.moment_curve(2)
        return cls(system.variables, system.components, name="parabola")

    @classmethod
    def paraboloid(cls):
        """
        (n_0, n_1, n_0^2 + n_1^2)
        """
        return cls(
            2,
            (
                PhaseComponent(1, (MonomialTerm((1, 0), 1),)),
                PhaseComponent(1, (MonomialTerm((0, 1), 1),)),
                PhaseComponent(2, (MonomialTerm((2, 0), 1), MonomialTerm((0, 2), 1))),
            ),
            name="paraboloid",
        )

    @property
    def k(self):
        """
        Number of components
        """
        return len(self.components)

    @property
    def degrees(self):
        """
        (|e_1|, ..., |e_k|)
        """
        return tuple(component.degree for component in self.components)

    @property
    def is_integral(self):
        return all(component.is_integral for component in self.components)

    @property
    def scales(self):
        return tuple(component.scale for component in self.components)

    def component(self, label):
        """
        The component with label (j, l)
        """
        for component in self.components:
            if component.label == tuple(label):
                return component
        raise KeyError(label)
