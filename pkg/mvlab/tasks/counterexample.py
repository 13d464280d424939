"""
The p-adic paraboloid counterexample.

For N = p^k, p = 1 mod 4 and xi^2 = -1 mod N^2, the functions

    f_n(x) = 1_{p^{-2k} Z_p^3}(x) chi_p(x . (n xi, n, 0)),   0 <= n < N,

have Fourier support in N^{-2} caps of the paraboloid (a, b, a^2 + b^2),
each of unit modulus on a ball of Haar measure N^6 (so ||f_n||_r = N^{6/r}).

Norm of the sum.  The integrand depends on x only through
t = x_1 xi + x_2 modulo Z_p: x_3 drops out because the third frequency
coordinate is 0, contributing a factor N^2 (the measure of p^{-2k} Z_p).
Modulo Z_p, (x_1, x_2) ranges over (Z/N^2)^2 classes u / N^2 of measure 1
each, and u_1 xi + u_2 takes every value w of Z/N^2 exactly N^2 times.
Therefore

    ||sum_n f_n||_r^r = N^2 sum_{u_1, u_2} |sum_n e((u_1 xi + u_2) n / N^2)|^r
                      = N^4 sum_{w mod N^2} |sum_n e(w n / N^2)|^r.
"""
import math

import numpy as np
from tqdm import tqdm

from ..constants import CHUNK_SIZE
from ..logs import logger
from ..models.counterexample import CounterexampleFamily
from ..models.scale import ScaleSpec
from ..threads.workers import map_in_order
from ..utils.exceptions import BudgetExceeded, UnsupportedPrime
from .exact import chunk_ranges, modulus_power, unit_root_table
from .padic import hensel_sqrt_minus_one


def _settings():
    from ..conf import settings

    return settings


def make_family(p, k, r):
    """
    The family at N = p^k with xi lifted modulo N^2
    """
    if p % 4 != 1:
        raise UnsupportedPrime(p, "the counterexample needs p = 1 mod 4")
    return CounterexampleFamily(ScaleSpec(p, k), hensel_sqrt_minus_one(p, 2 * k), r)


def single_norm(family):
    """
    ||f_n||_r = N^{6/r}
    """
    return float(family.N) ** (6 / family.r)


def _check_budget(work, budget):
    if budget is None:
        budget = _settings().residue_budget
    if work > budget:
        raise BudgetExceeded("residue terms", work, budget)


def _power_sums(family, frequencies, threads):
    """
    sum over frequency rows w of |sum_{n<N} e(w n / N^2)|^r, in chunk order
    """
    modulus = family.modulus
    table = unit_root_table(modulus)
    n = np.arange(family.N, dtype=np.int64)

    def chunk_sum(bounds):
        start, stop = bounds
        w = frequencies[start:stop]
        sums = table[(w[:, None] * n[None, :]) % modulus].sum(axis=1)
        return math.fsum(modulus_power(sums.real ** 2 + sums.imag ** 2, family.r))

    partials = map_in_order(
        chunk_sum, chunk_ranges(len(frequencies), CHUNK_SIZE), threads or _settings().threads
    )
    return math.fsum(partials)


def sum_norm(family, threads=None, budget=None):
    """
    ||sum_{n<N} f_n||_r from the one-dimensional residue sum over w mod N^2
    """
    modulus = family.modulus
    _check_budget(modulus * family.N, budget)
    total = _power_sums(family, np.arange(modulus, dtype=np.int64), threads)
    norm = (float(family.N) ** 4 * total) ** (1 / family.r)
    logger.debug("||sum f_n||_%s at N = %s: %r" % (family.r, family.N, norm))
    return norm


def sum_norm_direct(family, threads=None, budget=None):
    """
    ||sum_{n<N} f_n||_r from the two-dimensional enumeration of
    (u_1, u_2) mod N^2, an independent check of the reduction to w
    """
    modulus = family.modulus
    _check_budget(modulus ** 2 * family.N, budget)
    u1, u2 = np.meshgrid(
        np.arange(modulus, dtype=np.int64), np.arange(modulus, dtype=np.int64),
        indexing="ij",
    )
    frequencies = ((u1 * (family.xi.xi % modulus) + u2) % modulus).ravel()
    total = _power_sums(family, frequencies, threads)
    return (float(family.N) ** 2 * total) ** (1 / family.r)


def decoupling_ratio(family, threads=None, budget=None, norm=None):
    """
    ||sum f_n||_r / (sum_n ||f_n||_r^2)^{1/2}; the denominator is N^{1/2 + 6/r}
    """
    if norm is None:
        norm = sum_norm(family, threads, budget)
    return norm / float(family.N) ** (0.5 + 6 / family.r)


def verify_paraboloid_membership(family):
    """
    True iff (n xi)^2 + n^2 = 0 mod N^2 for every n < N
    """
    xi = family.xi.xi
    modulus = family.modulus
    return all(((n * xi) ** 2 + n * n) % modulus == 0 for n in range(family.N))


GROWTH_HEADER = ["p", "k", "N", "r", "single_norm", "sum_norm", "ratio", "log_ratio"]


def counterexample_growth(p, kmax, r_list, threads=None, budget=None, progress=False):
    """
    Rows (p, k, N, r, single_norm, sum_norm, ratio, log_ratio) for
    k = 1..kmax and each r, and per r the least-squares slopes of
    log sum_norm and log ratio against log N (None with fewer than 2 values of k)
    """
    rows = []
    steps = [(k, r) for k in range(1, kmax + 1) for r in r_list]
    if progress:
        steps = tqdm(steps, desc="counterexample", leave=False)
    for k, r in steps:
        family = make_family(p, k, r)
        norm = sum_norm(family, threads, budget)
        ratio = decoupling_ratio(family, norm=norm)
        rows.append(
            (p, k, family.N, float(r), single_norm(family), norm, ratio, math.log(ratio))
        )
    slopes = {}
    for r in r_list:
        selected = [row for row in rows if row[3] == float(r)]
        if len(selected) < 2:
            slopes[float(r)] = None
            continue
        log_n = np.log([float(row[2]) for row in selected])
        sum_slope = np.polyfit(log_n, np.log([row[5] for row in selected]), 1)[0]
        ratio_slope = np.polyfit(log_n, np.log([row[6] for row in selected]), 1)[0]
        slopes[float(r)] = GrowthSlopes(
            float(sum_slope), float(ratio_slope), 1 + 5 / r, 0.5 - 1 / r
        )
    logger.info("Counterexample growth at p = %s for k <= %s" % (p, kmax))
    return rows, slopes


class GrowthSlopes:
    """
    Measured slopes against log N and the exponents they are compared with
    """

    def __init__(self, sum_slope, ratio_slope, expected_sum, expected_ratio):
        self.sum_slope = sum_slope
        self.ratio_slope = ratio_slope
        self.expected_sum = expected_sum
        self.expected_ratio = expected_ratio
