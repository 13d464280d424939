"""
p-adic short mean values, real sparse mean values and the
transference check between them.

With cell_counts M_j = N^{|e_j| - sigma_j}, the p-adic mean value is the
finite sum

    N^{sum_j (sigma_j - |e_j|)} sum_iota |sum_n a_n e(sum_j iota_j P_j(n) / M_j)|^r,

an average over the prod_j M_j cells.  The real mean value over the
sparse domain is the average, over v in the centered cell R, of the
p-adic mean value of the modulated coefficients a_n(v) = a_n e(v . P(n)):
each cell integral is an integral over R after translating to the cell
center.  Both are evaluated by one kernel that treats every coefficient
vector as a column.
"""
import math
from fractions import Fraction
from math import lcm, prod

import mpmath
import numpy as np
from mpmath.libmp import prec_to_dps

from ..constants import CHUNK_SIZE
from ..logs import logger
from ..models.coefficients import CoefficientVector
from ..models.quadrature import QuadratureConfig
from ..models.rational import PhaseFraction, as_rational
from ..models.report import MeanValueMethod, MeanValueReport, TransferReport
from ..threads.workers import map_in_order
from ..utils.exceptions import BudgetExceeded, InvalidInput
from .algebra import evaluate_phase
from .domains import build_domain, check_cell_budget
from .exact import (
    FLOAT_KERNEL_PRECISION, chunk_ranges, column_tree_sum, modulus_power, unit_root_mp_table,
    unit_root_table, working_precision,
)
from .quadrature import choose_depths, richardson_pair


def _settings():
    from ..conf import settings

    return settings


def phase_values(system, omega):
    """
    Exact integer component values, one row per point of omega
    """
    if not system.is_integral:
        raise InvalidInput(
            "Phase system %s has non-integer coefficients; normalize it first"
            % (system.name or "")
        )
    if omega.d != system.variables:
        raise InvalidInput(
            "Index domain points have %s coordinates but the phase system has %s variables"
            % (omega.d, system.variables)
        )
    return [evaluate_phase(system, point) for point in omega]


class CellKernel:
    """
    Averages over a grid of cells iota in prod_j Z/M_j of
    |sum_n B[n, c] e(sum_j iota_j P_j(n) / M_j)|^r, one average per
    column c of B.

    At working precisions above FLOAT_KERNEL_PRECISION the sums and their
    powers are accumulated in mpmath.
    """

    def __init__(self, counts, values, r, threads=None, precision=None):
        self.counts = tuple(int(count) for count in counts)
        self.total_cells = prod(self.counts)
        self.r = r
        self.threads = threads or _settings().threads
        self.precision = working_precision(precision)
        self.high_precision = self.precision > FLOAT_KERNEL_PRECISION
        self.denominator = lcm(*self.counts)
        # residues[j, n] = (P_j(n) mod M_j) * (L / M_j), so that the phase of
        # cell iota is sum_j iota_j residues[j, n] / L modulo 1.
        self.residues = np.array(
            [
                [
                    (row[j] % count) * (self.denominator // count)
                    for row in values
                ]
                for j, count in enumerate(self.counts)
            ],
            dtype=np.int64,
        ).reshape(len(self.counts), len(values))
        if not self.high_precision:
            self.table = unit_root_table(self.denominator, self.precision)

    def _numerators(self, start, stop):
        iota = np.stack(
            np.unravel_index(np.arange(start, stop), self.counts), axis=1
        ).astype(np.int64)
        numerators = np.zeros((stop - start, self.residues.shape[1]), dtype=np.int64)
        for j in range(len(self.counts)):
            numerators = (
                numerators + iota[:, j, None] * self.residues[j][None, :]
            ) % self.denominator
        return numerators

    def _chunk_sums(self, cell_range, columns):
        phases = self.table[self._numerators(*cell_range)]
        sums = []
        for column_start, column_stop in chunk_ranges(columns.shape[1]):
            totals = phases @ columns[:, column_start:column_stop]
            powers = modulus_power(totals.real ** 2 + totals.imag ** 2, self.r)
            sums.append(powers.sum(axis=0))
        return np.concatenate(sums) if sums else np.zeros(0)

    def _chunk_sums_mp(self, cell_range, rows):
        table = unit_root_mp_table(self.denominator, self.precision)
        width = len(rows[0])
        with mpmath.workprec(self.precision):
            exponent = mpmath.mpf(self.r)
            powers = [[] for _ in range(width)]
            for numerators in self._numerators(*cell_range):
                roots = [table[m] for m in numerators]
                for column in range(width):
                    total = mpmath.fsum(root * row[column] for root, row in zip(roots, rows))
                    powers[column].append(abs(total) ** exponent)
            return [mpmath.fsum(column) for column in powers]

    def averages(self, columns):
        """
        Per-column cell averages, reduced in a fixed chunk order
        """
        columns = np.asarray(columns, dtype=np.complex128)
        if columns.ndim == 1:
            columns = columns[:, None]
        if self.high_precision:
            rows = [[mpmath.mpc(complex(value)) for value in row] for row in columns]
            return np.array([float(value) for value in self.averages_mp(rows)])
        partials = map_in_order(
            lambda cell_range: self._chunk_sums(cell_range, columns),
            chunk_ranges(self.total_cells, CHUNK_SIZE),
            self.threads,
        )
        return column_tree_sum(partials) / self.total_cells

    def averages_mp(self, rows):
        """
        Per-column cell averages as mpmath.mpf at the working precision.

        rows: one list of mpmath.mpc entries per point of omega.  mpmath's
        working precision is process-wide, so chunks run on one thread.
        """
        partials = [
            self._chunk_sums_mp(cell_range, rows)
            for cell_range in chunk_ranges(self.total_cells, CHUNK_SIZE)
        ]
        with mpmath.workprec(self.precision):
            return [
                mpmath.fsum(partial[column] for partial in partials) / self.total_cells
                for column in range(len(rows[0]))
            ]

    def value(self, a):
        """
        (float average, full-precision text or None) for one coefficient
        vector; the high-precision path evaluates the phases of a exactly
        """
        if not self.high_precision:
            return float(self.averages(a.values())[0]), None
        (average,) = self.averages_mp([[value] for value in a.values_mp(self.precision)])
        return float(average), mpmath.nstr(average, prec_to_dps(self.precision))


def modulate_coefficients(a, v, system):
    """
    a_n(v) = a_n e(sum_j v_j P_j(n)), with exact phases; |a_n(v)| = |a_n|
    """
    v = tuple(as_rational(value) for value in v)
    if len(v) != system.k:
        raise InvalidInput("v has %s entries but the phase system has %s components"
                           % (len(v), system.k))
    phases = []
    for point, phase in zip(a.domain, a.phases):
        shift = sum(
            (v_j * component.evaluate(point) for v_j, component in zip(v, system.components)),
            Fraction(0),
        )
        phases.append(phase + PhaseFraction(shift))
    return a.with_phases(phases)


def padic_short_mv(system, omega, a, r, scale, sigma, threads=None, budget=None,
                   precision=None):
    """
    The p-adic short mean value, including the N^{sum sigma_j} normalization
    """
    _check_exponent(r)
    domain = build_domain(scale, sigma, system.degrees)
    check_cell_budget(domain, budget)
    kernel = CellKernel(domain.cell_counts, phase_values(system, omega), r, threads, precision)
    value, value_text = kernel.value(a)
    logger.debug(
        "p-adic mean value over %s cells: %r" % (domain.total_cells, value)
    )
    return MeanValueReport(
        value=value, r=r, method=MeanValueMethod.PADIC_EXACT, cells=domain.total_cells,
        value_text=value_text,
    )


def _check_exponent(r):
    if not r >= 2:
        raise InvalidInput("r must be at least 2, not %s" % r)


def _is_even_integer(r):
    return float(r).is_integer() and int(r) % 2 == 0


def torus_counts(values, r, base):
    """
    Grid sizes M_j, powers of base, with M_j > (r/2) (max P_j - min P_j)
    over omega.  For even r the integrand has no frequency of size M_j or
    more on axis j, so its average over prod_j Z/M_j is its integral over
    the torus.
    """
    half = int(r) // 2
    counts = []
    for j in range(len(values[0])):
        column = [row[j] for row in values]
        spread = half * (max(column) - min(column))
        count = 1
        while count <= spread:
            count *= base
        counts.append(count)
    return tuple(counts)


def torus_mv(system, omega, a, r, scale, threads=None, budget=None, precision=None):
    """
    The real mean value at sigma = 0, where the cells tile the torus,
    as an exact grid average; r must be an even integer
    """
    _check_exponent(r)
    if not _is_even_integer(r):
        raise InvalidInput("Exact torus averages need an even integer r, not %s" % r)
    values = phase_values(system, omega)
    counts = torus_counts(values, r, scale.p)
    points = prod(counts)
    if budget is None:
        budget = _settings().cell_budget
    if points > budget:
        raise BudgetExceeded("torus grid points", points, budget)
    kernel = CellKernel(counts, values, r, threads, precision)
    value, value_text = kernel.value(a)
    logger.debug("Real mean value on the %s torus grid: %r" % ("x".join(map(str, counts)), value))
    return MeanValueReport(
        value=value, r=r, method=MeanValueMethod.REAL_TORUS, cells=points,
        value_text=value_text,
    )


class SparseQuadrature:
    """
    Fine and coarse quadrature over the centered cell for one
    (system, omega, r, scale, sigma), sharing a CellKernel
    """

    def __init__(self, system, omega, r, scale, sigma, quad=None, threads=None,
                 budget=None, precision=None):
        _check_exponent(r)
        self.quad = quad or QuadratureConfig.from_settings()
        self.system = system
        self.domain = build_domain(scale, sigma, system.degrees)
        check_cell_budget(self.domain, budget)
        values = phase_values(system, omega)
        bounds = [
            max(abs(row[j]) for row in values) for j in range(system.k)
        ]
        depths = choose_depths(self.domain.cell_halfwidths, bounds, r, self.quad)
        self.fine, self.coarse = richardson_pair(
            self.domain.cell_halfwidths, depths, self.quad.nodes
        )
        evaluations = self.domain.total_cells * (len(self.fine) + len(self.coarse))
        if budget is None:
            budget = _settings().cell_budget
        if evaluations > budget:
            raise BudgetExceeded("cell-node evaluations", evaluations, budget)
        self.kernel = CellKernel(self.domain.cell_counts, values, r, threads, precision)
        self.phase_matrix = np.array(values, dtype=np.float64)

    def _columns(self, a, rule):
        angles = self.phase_matrix @ rule.nodes.T
        return a.values()[:, None] * np.exp(2j * np.pi * angles)

    def node_values(self, a):
        """
        p-adic mean values of a(v) at the fine and the coarse nodes
        """
        fine_columns = self._columns(a, self.fine)
        coarse_columns = self._columns(a, self.coarse)
        averages = self.kernel.averages(np.hstack([fine_columns, coarse_columns]))
        return averages[: len(self.fine)], averages[len(self.fine):]

    def integrate(self, a):
        """
        (fine value, coarse value, fine node values)
        """
        fine_values, coarse_values = self.node_values(a)
        fine = math.fsum(self.fine.weights * fine_values)
        coarse = math.fsum(self.coarse.weights * coarse_values)
        return fine, coarse, fine_values

    def report(self, a):
        fine, coarse, _ = self.integrate(a)
        return MeanValueReport(
            value=fine,
            r=self.kernel.r,
            method=MeanValueMethod.REAL_QUADRATURE,
            quadrature_error_bound=abs(fine - coarse),
            cells=self.domain.total_cells,
            nodes=len(self.fine),
            depths=self.fine.depths,
        )


def real_sparse_mv(system, omega, a, r, scale, sigma, quad=None, threads=None,
                   budget=None, precision=None):
    """
    The real mean value over the sparse domain, including the N^{sum sigma_j}
    normalization.

    At sigma = 0 with an even integer r and automatic depths the value is
    an exact torus average; otherwise it comes from quadrature with a
    two-level error estimate.
    """
    quad = quad or QuadratureConfig.from_settings()
    domain = build_domain(scale, sigma, system.degrees)
    if domain.sigma.total == 0 and quad.depth is None and _is_even_integer(r):
        return torus_mv(system, omega, a, r, scale, threads, budget, precision)
    quadrature = SparseQuadrature(
        system, omega, r, scale, sigma, quad, threads, budget, precision
    )
    report = quadrature.report(a)
    logger.debug(
        "Real mean value over %s cells x %s nodes: %r (error bound %r)"
        % (report.cells, report.nodes, report.value, report.quadrature_error_bound)
    )
    return report


def transfer_check(system, omega, a, r, scale, sigma, grid=None, quad=None,
                   threads=None, budget=None, precision=None, quadrature=None):
    """
    Compare the real mean value with the largest p-adic mean value of the
    modulated coefficients a(v) over a grid of v in the centered cell.

    The default grid is the fine quadrature nodes, whose p-adic values the
    real value is a weighted average of.  An explicit grid is a sequence of
    k-tuples of rationals.
    """
    if quadrature is None:
        quadrature = SparseQuadrature(
            system, omega, r, scale, sigma, quad, threads, budget, precision
        )
    fine, coarse, fine_values = quadrature.integrate(a)
    at_zero = float(quadrature.kernel.averages(a.values())[0])
    if grid is None:
        grid_values = fine_values
        grid_size = len(quadrature.fine)
    else:
        columns = np.stack(
            [modulate_coefficients(a, v, system).values() for v in grid], axis=1
        )
        grid_values = quadrature.kernel.averages(columns)
        grid_size = len(grid)
    return TransferReport(
        real_value=fine,
        padic_sup_over_grid=float(np.max(grid_values)),
        padic_at_zero=at_zero,
        quadrature_error_bound=abs(fine - coarse),
        tolerance=quadrature.quad.tolerance,
        grid_size=grid_size,
    )


def ones(omega):
    return CoefficientVector.constant(omega, 1)
