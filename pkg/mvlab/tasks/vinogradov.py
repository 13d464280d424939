"""
Counting solutions of Vinogradov systems with algebraic indeterminates:

    sum_{i<=s} beta_i^t = sum_{i<=s} gamma_i^t   (t = 1, ..., k)

where beta_i = sum_l n_il alpha^l and gamma_i = sum_l m_il alpha^l with
0 <= n_il, m_il < N.  Each s-tuple of betas maps to a key, the exact
coordinates of its power sums; J is the sum over keys of multiplicity^2.
"""
import time
from collections import Counter
from itertools import product
from math import lcm

import numpy as np
from tqdm import tqdm

from ..logs import logger
from ..models.field import FieldElement
from ..models.solutions import CountingMethod, GrowthFit, SolutionCountRecord
from ..threads.workers import map_in_order
from ..utils.exceptions import BudgetExceeded, InvalidInput

INT64_HEADROOM = 2 ** 62


def _settings():
    from ..conf import settings

    return settings


def _powers(beta, k, minpoly):
    from .algebra import field_multiply

    powers = [beta]
    for _ in range(k - 1):
        powers.append(field_multiply(powers[-1], beta, minpoly))
    return powers


def power_table(minpoly, k, N):  # pylint: disable=invalid-name
    """
    Rows (one per beta, betas in lexicographic order of (n_0, ..., n_{d-1}))
    of the coordinates of beta, beta^2, ..., beta^k, each block of d
    coordinates scaled to integers; returns (rows, key_scales)
    """
    degree = minpoly.degree
    blocks = []
    for coords in product(range(N), repeat=degree):
        beta = FieldElement(coords)
        blocks.append([power.coords for power in _powers(beta, k, minpoly)])
    scales = []
    for t in range(k):
        scales.append(
            lcm(*(c.denominator for block in blocks for c in block[t]))
        )
    rows = [
        [int(c * scales[t]) for t in range(k) for c in block[t]]
        for block in blocks
    ]
    return rows, tuple(scales)


def _polynomial_multiply(left, right):
    product_ = [0] * (len(left) + len(right) - 1)
    for i, x in enumerate(left):
        for j, y in enumerate(right):
            product_[i + j] += x * y
    return product_


def formal_power_table(degree, k, N):  # pylint: disable=invalid-name
    """
    Rows of the coefficients of beta(x)^t for t = 1..k, with alpha
    replaced by a formal variable x (no reduction)
    """
    rows = []
    for coords in product(range(N), repeat=degree):
        polynomial = [int(c) for c in coords]
        power = [1]
        row = []
        for _ in range(k):
            power = _polynomial_multiply(power, polynomial)
            row.extend(int(c) for c in power)
        rows.append(row)
    return rows


def _as_array(rows, s):
    """
    int64 array of the rows, or None if sums of s rows might overflow
    """
    largest = max((abs(value) for row in rows for value in row), default=0)
    if largest * s >= INT64_HEADROOM:
        return None
    return np.array(rows, dtype=np.int64)


def _tuple_sums(table, count):
    """
    Sums of every ordered `count`-tuple of rows, in lexicographic order
    """
    sums = np.zeros((1, table.shape[1]), dtype=np.int64)
    for _ in range(count):
        sums = (sums[:, None, :] + table[None, :, :]).reshape(-1, table.shape[1])
    return sums


def _merge_sorted(stored_keys, stored_counts, keys, counts):
    keys = np.concatenate([stored_keys, keys])
    counts = np.concatenate([stored_counts, counts])
    unique, inverse = np.unique(keys, axis=0, return_inverse=True)
    return unique, np.bincount(inverse.ravel(), weights=counts, minlength=len(unique)).astype(np.int64)


def _sum_of_squares(counts):
    return sum(int(count) ** 2 for count in counts)


def _count_keys(rows, s, spill_threshold, threads, progress):
    """
    sum over distinct keys of multiplicity^2, streaming over the
    leading beta of each s-tuple.

    Leading betas go in batches of about spill_threshold keys.  Past the
    threshold each batch is merged into sorted (key, count) arrays before
    the next one is enumerated.
    """
    table = _as_array(rows, s)
    if table is None:
        logger.debug("Key entries exceed int64, counting with Python integers")
        counter = Counter(
            tuple(map(sum, zip(*combination)))
            for combination in product([tuple(row) for row in rows], repeat=s)
        )
        return _sum_of_squares(counter.values())
    rest = _tuple_sums(table, s - 1)

    def block_keys(leading):
        return np.unique(table[leading] + rest, axis=0, return_counts=True)

    total = len(table) * len(rest)
    batch = max(1, spill_threshold // len(rest))
    batches = [
        range(start, min(start + batch, len(table))) for start in range(0, len(table), batch)
    ]
    if progress:
        batches = tqdm(batches, desc="keys", leave=False)
    spill = total > spill_threshold
    if spill:
        logger.debug("%s keys exceed the spill threshold, merging by sorting" % total)
    counts = {}
    stored_keys = np.zeros((0, table.shape[1]), dtype=np.int64)
    stored_counts = np.zeros(0, dtype=np.int64)
    for leading in batches:
        blocks = map_in_order(block_keys, leading, threads)
        if spill:
            stored_keys, stored_counts = _merge_sorted(
                stored_keys, stored_counts,
                np.concatenate([keys for keys, _ in blocks]),
                np.concatenate([key_counts for _, key_counts in blocks]),
            )
            continue
        for keys, key_counts in blocks:
            for key, count in zip(keys, key_counts):
                key = key.tobytes()
                counts[key] = counts.get(key, 0) + int(count)
    return _sum_of_squares(stored_counts if spill else counts.values())


def _check_arguments(s, k, N):  # pylint: disable=invalid-name
    for name, value in (("s", s), ("k", k), ("N", N)):
        if value < 1:
            raise InvalidInput("%s must be a positive integer, not %s" % (name, value))


def count_solutions(minpoly, s, k, N, budget=None, spill_threshold=None,
                    threads=None, progress=False, timing=False):
    """
    J_{s,k,d}(N; alpha) by hashing the keys of all N^{ds} ordered s-tuples
    """
    _check_arguments(s, k, N)
    settings = _settings()
    budget = settings.key_budget if budget is None else budget
    spill_threshold = settings.spill_threshold if spill_threshold is None else spill_threshold
    keys = N ** (minpoly.degree * s)
    if keys > budget:
        raise BudgetExceeded("keys", keys, budget)
    started = time.perf_counter()
    rows, scales = power_table(minpoly, k, N)
    solutions = _count_keys(rows, s, spill_threshold, threads or settings.threads, progress)
    seconds = time.perf_counter() - started if timing else None
    logger.info(
        "J(s=%s, k=%s, d=%s, N=%s) = %s for %s" % (s, k, minpoly.degree, N, solutions, minpoly)
    )
    return SolutionCountRecord(
        s, k, N, minpoly, solutions, CountingMethod.HASH, seconds, scales
    )


def count_solutions_formal(minpoly, s, k, N, budget=None, spill_threshold=None,
                           threads=None, progress=False, timing=False):
    """
    J with alpha treated as a formal variable: keys are the coefficients
    of the power sums before reduction modulo P.  Only the degree of P
    is used.
    """
    _check_arguments(s, k, N)
    settings = _settings()
    budget = settings.key_budget if budget is None else budget
    spill_threshold = settings.spill_threshold if spill_threshold is None else spill_threshold
    keys = N ** (minpoly.degree * s)
    if keys > budget:
        raise BudgetExceeded("keys", keys, budget)
    started = time.perf_counter()
    rows = formal_power_table(minpoly.degree, k, N)
    solutions = _count_keys(rows, s, spill_threshold, threads or settings.threads, progress)
    seconds = time.perf_counter() - started if timing else None
    return SolutionCountRecord(s, k, N, minpoly, solutions, CountingMethod.FORMAL, seconds)


def count_solutions_brute(minpoly, s, k, N, budget=None, timing=False):
    """
    J by comparing every pair of s-tuple keys
    """
    _check_arguments(s, k, N)
    budget = _settings().pair_budget if budget is None else budget
    pairs = N ** (2 * minpoly.degree * s)
    if pairs > budget:
        raise BudgetExceeded("pairs of s-tuples", pairs, budget)
    started = time.perf_counter()
    rows, scales = power_table(minpoly, k, N)
    table = _as_array(rows, s)
    if table is None:
        keys = [
            tuple(map(sum, zip(*combination)))
            for combination in product([tuple(row) for row in rows], repeat=s)
        ]
        solutions = sum(1 for key in keys for other in keys if key == other)
    else:
        keys = _tuple_sums(table, s)
        solutions = sum(
            int(np.count_nonzero((keys == key).all(axis=1))) for key in keys
        )
    seconds = time.perf_counter() - started if timing else None
    return SolutionCountRecord(
        s, k, N, minpoly, solutions, CountingMethod.BRUTE, seconds, scales
    )


def envelope_exponent(d, s, k):
    """
    max(ds, 2ds - dk(k+1)/2)
    """
    return max(d * s, 2 * d * s - d * k * (k + 1) // 2)


COUNTERS = {
    CountingMethod.HASH: count_solutions,
    CountingMethod.FORMAL: count_solutions_formal,
}


def fit_growth(minpoly, s, k, N_list, method=CountingMethod.HASH, counter_kwargs=None):  # pylint: disable=invalid-name
    """
    Least-squares slope of log J against log N over N_list
    """
    N_list = [int(N) for N in N_list]  # pylint: disable=invalid-name
    if len(N_list) < 3:
        raise InvalidInput("Fitting growth needs at least 3 values of N, got %s" % len(N_list))
    if any(b <= a for a, b in zip(N_list, N_list[1:])):
        raise InvalidInput("N values must be strictly increasing: %s" % N_list)
    if N_list[0] < 2:
        raise InvalidInput("N values must be at least 2 to take logarithms")
    counter_kwargs = counter_kwargs or {}
    if method == CountingMethod.BRUTE:
        records = [count_solutions_brute(minpoly, s, k, N) for N in N_list]
    else:
        records = [COUNTERS[method](minpoly, s, k, N, **counter_kwargs) for N in N_list]
    log_n = np.log(np.array(N_list, dtype=np.float64))
    log_j = np.log(np.array([float(record.J) for record in records]))
    slope, intercept = np.polyfit(log_n, log_j, 1)
    residuals = log_j - (slope * log_n + intercept)
    return GrowthFit(
        tuple(records),
        float(slope),
        float(intercept),
        tuple(float(residual) for residual in residuals),
        envelope_exponent(minpoly.degree, s, k),
    )


def solution_rows(records):
    """
    CSV rows (d, s, k, N, minpoly, J, method, seconds)
    """
    return [
        (record.d, record.s, record.k, record.N, record.minpoly.format(), record.J,
         record.method, record.seconds)
        for record in records
    ]


SOLUTION_HEADER = ["d", "s", "k", "N", "minpoly", "J", "method", "seconds"]
