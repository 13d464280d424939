"""
Exact phases, unit roots and reproducible complex accumulation.

Phases are accumulated exactly (integer numerators modulo a common
denominator); floating point enters only when e(q) is evaluated.
Every reduction works on chunks of CHUNK_SIZE terms in a fixed order,
so results do not depend on how chunks are spread over threads.
"""
import math
import threading
from fractions import Fraction

import mpmath
import numpy as np

from ..constants import CHUNK_SIZE
from ..logs import logger
from ..models.rational import PhaseFraction

DEFAULT_PRECISION = 64

# Kernels at or below this many bits run in complex128 with compensated
# reductions; above it they accumulate in mpmath at the working precision.
FLOAT_KERNEL_PRECISION = 64

_UNIT_ROOT_TABLES = {}
_UNIT_ROOT_TABLES_LOCK = threading.Lock()


def working_precision(precision):
    if precision:
        return int(precision)
    from ..conf import settings

    return settings.precision or DEFAULT_PRECISION


def unit_root(q, precision=None):
    """
    e(q) = exp(2 pi i q) as an mpmath.mpc at the working precision
    (mantissa bits, default from settings).

    cospi and sinpi are exact at multiples of 1/4 of a period,
    so e(0) = 1, e(1/2) = -1 and e(1/4) = i exactly.
    """
    if not isinstance(q, PhaseFraction):
        q = PhaseFraction.of(q)
    with mpmath.workprec(working_precision(precision)):
        angle = mpmath.mpf(2 * q.numerator) / q.denominator
        return mpmath.mpc(mpmath.cospi(angle), mpmath.sinpi(angle))


def unit_root_table(denominator, precision=None):
    """
    complex128 array of e(m / denominator) for m = 0, ..., denominator - 1,
    computed once per (denominator, precision)
    """
    key = (int(denominator), working_precision(precision))
    with _UNIT_ROOT_TABLES_LOCK:
        table = _UNIT_ROOT_TABLES.get(key)
        if table is None:
            logger.debug("Building unit root table of size %s" % denominator)
            table = np.array(
                [
                    complex(unit_root(Fraction(m, key[0]), key[1]))
                    for m in range(key[0])
                ],
                dtype=np.complex128,
            )
            table.setflags(write=False)
            _UNIT_ROOT_TABLES[key] = table
    return table


def unit_root_mp_table(denominator, precision=None):
    """
    Tuple of e(m / denominator) as mpmath.mpc at the working precision,
    computed once per (denominator, precision)
    """
    key = ("mpc", int(denominator), working_precision(precision))
    with _UNIT_ROOT_TABLES_LOCK:
        table = _UNIT_ROOT_TABLES.get(key)
        if table is None:
            logger.debug(
                "Building %s-bit unit root table of size %s" % (key[2], denominator)
            )
            table = tuple(unit_root(Fraction(m, key[1]), key[2]) for m in range(key[1]))
            _UNIT_ROOT_TABLES[key] = table
    return table


def chunk_ranges(total, size=CHUNK_SIZE):
    """
    (start, stop) pairs covering range(total) in chunks of `size`
    """
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _tree_sum(partials):
    """
    Pairwise sum in a fixed order
    """
    partials = list(partials)
    if not partials:
        return 0j
    while len(partials) > 1:
        paired = [
            partials[i] + partials[i + 1] for i in range(0, len(partials) - 1, 2)
        ]
        if len(partials) % 2:
            paired.append(partials[-1])
        partials = paired
    return partials[0]


def compensated_sum(values):
    """
    Sum of complex values: math.fsum within each chunk of CHUNK_SIZE
    terms, then a pairwise tree over the chunk partials
    """
    values = [complex(value) for value in values]
    partials = []
    for start, stop in chunk_ranges(len(values)):
        chunk = values[start:stop]
        partials.append(
            complex(
                math.fsum(value.real for value in chunk),
                math.fsum(value.imag for value in chunk),
            )
        )
    return complex(_tree_sum(partials))


def modulus_power(squared_moduli, r):
    """
    |S|^r from |S|^2: an integer power for even integer r, otherwise
    exp((r/2) log |S|^2), with |S|^2 = 0 giving 0
    """
    squared_moduli = np.asarray(squared_moduli, dtype=np.float64)
    r = float(r)
    if r.is_integer() and int(r) % 2 == 0:
        return squared_moduli ** (int(r) // 2)
    with np.errstate(divide="ignore"):
        logs = np.log(squared_moduli)
    return np.where(squared_moduli > 0, np.exp((r / 2) * logs), 0.0)


def column_tree_sum(partials):
    """
    Per-column math.fsum over chunk partials, in chunk order.

    partials: sequence of equal-length 1-d arrays, one per chunk
    """
    partials = [np.asarray(partial, dtype=np.float64) for partial in partials]
    if not partials:
        return np.zeros(0)
    stacked = np.vstack(partials)
    return np.array([math.fsum(stacked[:, column]) for column in range(stacked.shape[1])])
