"""
Arithmetic in L = Q(alpha) = Q[x]/(P), traces of powers of alpha and
the trace-expanded phase systems built from them.

For beta = sum_l n_l alpha^l, the j-th power has the trace expansion

    Tr(alpha^l beta^j) = sum_{|e| = j} (j choose e) Tr(alpha^{l + sum_i i e_i}) n^e

and component (j, l) of the phase system is that homogeneous polynomial
in n = (n_0, ..., n_{d-1}), normalized by a recorded rational scale.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import sympy
from sympy.ntheory.multinomial import multinomial_coefficients

from ..logs import logger
from ..models.field import FieldElement, MinimalPolynomial
from ..models.phasesystem import MonomialTerm, PhaseComponent, PhaseSystem
from ..utils.csvfiles import read_csv, write_csv
from ..utils.exceptions import InvalidInput
from ..utils.parsing import parse_index, parse_rational


class Normalization:
    """
    Enumerated data type for phase component normalizations.
    """

    # Clear denominators, then divide by the (positive) integer content:
    CONTENT = "content"

    # Divide the raw trace expansion by the degree d:
    DEGREE = "degree"

    # Keep the raw trace expansion:
    RAW = "raw"


NORMALIZATIONS = (Normalization.CONTENT, Normalization.DEGREE, Normalization.RAW)


def parse_minpoly(text):
    """
    Parse "c_0,c_1,...,c_{d-1}" for P(x) = x^d + c_{d-1} x^{d-1} + ... + c_0
    """
    return MinimalPolynomial.parse(text)


def _reduce_modulo(product, minpoly):
    """
    Reduce an ascending coefficient list modulo P, using
    x^d = -(c_{d-1} x^{d-1} + ... + c_0)
    """
    degree = minpoly.degree
    product = list(product)
    for power in range(len(product) - 1, degree - 1, -1):
        top = product[power]
        if top:
            for i, coefficient in enumerate(minpoly.coefficients):
                product[power - degree + i] -= top * coefficient
        product[power] = Fraction(0)
    return product[:degree] + [Fraction(0)] * (degree - len(product))


def field_multiply(a, b, minpoly):
    """
    a * b in Q[x]/(P), exact
    """
    degree = minpoly.degree
    if a.degree != degree or b.degree != degree:
        raise InvalidInput(
            "Field elements of length %s and %s do not belong to a field of degree %s"
            % (a.degree, b.degree, degree)
        )
    product = [Fraction(0)] * (2 * degree - 1)
    for i, x in enumerate(a.coords):
        if x:
            for j, y in enumerate(b.coords):
                product[i + j] += x * y
    return FieldElement(tuple(_reduce_modulo(product, minpoly)))


def field_trace(a, minpoly):
    """
    Tr(a): the trace of the multiplication-by-a operator on the power basis
    """
    degree = minpoly.degree
    total = Fraction(0)
    for i in range(degree):
        basis = FieldElement(tuple(Fraction(int(j == i)) for j in range(degree)))
        total += field_multiply(a, basis, minpoly).coords[i]
    return total


def power_sums(minpoly, kappa_max):
    """
    Power sums p_0, ..., p_{kappa_max} of the roots of P, by Newton's
    identities.  With a_i = c_{d-i}:

      p_kappa = -(a_1 p_{kappa-1} + ... + a_{kappa-1} p_1) - kappa a_kappa,  kappa <= d
      p_kappa = -(a_1 p_{kappa-1} + ... + a_d p_{kappa-d}),                  kappa > d
    """
    degree = minpoly.degree
    a = [Fraction(1)] + [minpoly.coefficients[degree - i] for i in range(1, degree + 1)]
    sums = [Fraction(degree)]
    for kappa in range(1, kappa_max + 1):
        total = -sum(
            (a[i] * sums[kappa - i] for i in range(1, min(kappa, degree + 1))),
            Fraction(0),
        )
        if kappa <= degree:
            total -= kappa * a[kappa]
        sums.append(total)
    return sums


def trace_power(minpoly, kappa):
    """
    Tr_{L/Q}(alpha^kappa), exact
    """
    if kappa < 0:
        raise InvalidInput("kappa must be nonnegative, not %s" % kappa)
    return power_sums(minpoly, kappa)[kappa]


def companion_trace_power(minpoly, kappa):
    """
    Trace of the kappa-th power of the companion matrix of P, exact
    """
    degree = minpoly.degree
    companion = sympy.zeros(degree, degree)
    for i in range(degree - 1):
        companion[i + 1, i] = 1
    for i, coefficient in enumerate(minpoly.coefficients):
        companion[i, degree - 1] = -sympy.Rational(coefficient.numerator, coefficient.denominator)
    trace = sympy.Rational((companion ** kappa).trace())
    return Fraction(int(trace.p), int(trace.q))


def epsilon_table(ell, e1):
    """
    Sign pattern of the trace expansion for P = x^2 + 1:
    0 if ell + e1 is odd, -1 if ell + e1 = 2 mod 4, +1 if ell + e1 = 0 mod 4
    """
    if ell not in (0, 1):
        raise InvalidInput("ell must be 0 or 1, not %s" % ell)
    total = ell + e1
    if total % 2:
        return 0
    return -1 if total % 4 == 2 else 1


def multiindices(d, j):
    """
    All e in N^d with |e| = j, lexicographically descending
    """
    if d == 1:
        return [(j,)]
    result = []
    for first in range(j, -1, -1):
        for rest in multiindices(d - 1, j - first):
            result.append((first,) + rest)
    return result


def normalize_component(terms, degree, mode=Normalization.CONTENT):
    """
    Normalize the raw terms of a component; returns (terms, scale) with
    raw = scale * normalized
    """
    if mode not in NORMALIZATIONS:
        raise InvalidInput(
            "Unknown normalization %r; expected one of %s" % (mode, ", ".join(NORMALIZATIONS))
        )
    if not terms or mode == Normalization.RAW:
        return list(terms), Fraction(1)
    if mode == Normalization.DEGREE:
        scale = Fraction(degree)
    else:
        common = lcm(*(term.coefficient.denominator for term in terms))
        content = reduce(gcd, (int(term.coefficient * common) for term in terms))
        scale = Fraction(abs(content), common)
    normalized = [
        MonomialTerm(term.multiindex, term.coefficient / scale) for term in terms
    ]
    return normalized, scale


def expand_trace_phase(minpoly, k, normalization=Normalization.CONTENT):
    """
    The d*k component phase system indexed by (j, l), 1 <= j <= k,
    0 <= l <= d-1, in that order.
    """
    if k < 1:
        raise InvalidInput("k must be a positive integer, not %s" % k)
    degree = minpoly.degree
    traces = power_sums(minpoly, (degree - 1) * (k + 1))
    components = []
    for j in range(1, k + 1):
        coefficients = multinomial_coefficients(degree, j)
        for ell in range(degree):
            raw = []
            for e in multiindices(degree, j):
                weight = ell + sum(i * e_i for i, e_i in enumerate(e))
                coefficient = coefficients[e] * traces[weight]
                if coefficient:
                    raw.append(MonomialTerm(e, coefficient))
            terms, scale = normalize_component(raw, degree, normalization)
            components.append(PhaseComponent(j, terms, scale, label=(j, ell)))
    logger.debug(
        "Expanded %s to %s phase components" % (minpoly, len(components))
    )
    name = "trace:%s:%s" % (minpoly.format(), k)
    if normalization != Normalization.CONTENT:
        name += ":" + normalization
    return PhaseSystem(degree, components, name=name)


PHASE_SYSTEM_HEADER = ["j", "ell", "multiindex", "coefficient", "component_scale"]


def phase_system_rows(system):
    """
    One row per monomial; unlabelled components are numbered (j, 0)
    """
    rows = []
    for position, component in enumerate(system.components, start=1):
        j, ell = component.label or (position, 0)
        for term in component.terms:
            rows.append((j, ell, term.multiindex, term.coefficient, component.scale))
    return rows


def dump_phase_system(system, path, config=None):
    write_csv(path, PHASE_SYSTEM_HEADER, phase_system_rows(system), config)
    return path


def load_phase_system(path):
    """
    Read a phase system written by dump_phase_system.  Components are
    grouped by (j, ell) in file order; a component without terms can't
    be represented and is absent.
    """
    grouped = {}
    scales = {}
    for position, row in enumerate(read_csv(path), start=1):
        try:
            label = (int(row["j"]), int(row["ell"]))
            multiindex = parse_index(row["multiindex"])
            term = MonomialTerm(multiindex, parse_rational(row["coefficient"]))
            scale = parse_rational(row.get("component_scale") or "1")
        except (KeyError, ValueError, InvalidInput) as err:
            raise InvalidInput("Malformed phase system row in %s" % path, position) from err
        grouped.setdefault(label, []).append(term)
        scales[label] = scale
    if not grouped:
        raise InvalidInput("No phase system terms found in %s" % path)
    components = [
        PhaseComponent(terms[0].degree, terms, scales[label], label=label)
        for label, terms in grouped.items()
    ]
    variables = len(components[0].terms[0].multiindex)
    return PhaseSystem(variables, components, name="file:%s" % path)


def evaluate_phase(system, point):
    """
    Exact values (P_1(n), ..., P_k(n)); integral components give ints
    """
    point = tuple(int(x) for x in point)
    if len(point) != system.variables:
        raise InvalidInput(
            "Expected a %s-tuple, got %s" % (system.variables, point)
        )
    values = []
    for component in system.components:
        value = component.evaluate(point)
        values.append(int(value) if value.denominator == 1 else value)
    return tuple(values)
