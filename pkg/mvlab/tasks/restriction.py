"""
Sampled lower bounds for discrete restriction constants, and the
report-only experiments built on them.
"""
from fractions import Fraction

import numpy as np

from ..constants import SAMPLERS
from ..logs import logger
from ..models.coefficients import CoefficientVector, IndexDomain
from ..models.field import MinimalPolynomial
from ..models.phasesystem import PhaseSystem
from ..models.report import CanonicalCheck, RestrictionEstimate, SampleResult
from ..models.scale import LocalizationVector, ScaleSpec
from ..threads.workers import map_in_order
from ..utils.exceptions import InvalidInput
from .algebra import evaluate_phase
from .domains import build_domain, check_cell_budget
from .meanvalue import CellKernel, SparseQuadrature, phase_values, padic_short_mv
from .samplers import draws_for, sample_coefficients
from .vinogradov import count_solutions

PADIC = "padic"
REAL = "real"
SIDES = (PADIC, REAL)


def _draws(omega, samplers, seed, samples):
    for sampler in samplers:
        for index in range(draws_for(sampler, samples)):
            yield sampler, index, sample_coefficients(sampler, omega, seed, index)


def estimate_restriction_constant(system, omega, r, scale, sigma, side=PADIC,
                                  samplers=SAMPLERS, seed=0, samples=4, quad=None,
                                  threads=None, progress=False):
    """
    max over sampled a of value(a) / sum_n |a_n|^r, a lower bound for
    the optimal restriction constant on the given side
    """
    if side not in SIDES:
        raise InvalidInput("side must be padic or real, not %r" % side)
    draws = list(_draws(omega, samplers, seed, samples))
    results = []
    if side == PADIC:
        domain = build_domain(scale, sigma, system.degrees)
        check_cell_budget(domain)
        kernel = CellKernel(domain.cell_counts, phase_values(system, omega), r, threads)
        values = kernel.averages(np.stack([a.values() for _, _, a in draws], axis=1))
        for (sampler, index, a), value in zip(draws, values):
            results.append(SampleResult(sampler, seed, index, float(value), a.norm_power(r)))
    else:
        quadrature = SparseQuadrature(system, omega, r, scale, sigma, quad, threads)
        integrals = map_in_order(
            lambda draw: quadrature.integrate(draw[2]), draws, 1,
            progress="samples" if progress else None,
        )
        for (sampler, index, a), (fine, coarse, _) in zip(draws, integrals):
            results.append(
                SampleResult(sampler, seed, index, fine, a.norm_power(r), abs(fine - coarse))
            )
    estimate = RestrictionEstimate(side, r, tuple(results))
    logger.info(
        "%s restriction estimate at r = %s: %r (%s)"
        % (side, r, estimate.estimate, estimate.sampler)
    )
    return estimate


def best_per_sampler(estimate):
    """
    {sampler: the sample with the largest ratio}, in sampler order
    """
    best = {}
    for sample in estimate.samples:
        if sample.sampler not in best or sample.ratio > best[sample.sampler].ratio:
            best[sample.sampler] = sample
    return best


RATIO_HEADER = [
    "command", "p", "K", "sigma", "r", "sampler", "seed",
    "value", "denominator", "ratio", "error_bound", "envelope",
]


def corollary_ratio_experiment(p, K_list, sigma, r, samplers=SAMPLERS, seed=0,
                               samples=4, side=PADIC, quad=None, threads=None):  # pylint: disable=invalid-name
    """
    Measured restriction ratios for the parabola on the domain with
    localization (0, sigma), one row per (N, sampler), next to the
    envelope N^{r/2} + N^{r - 4 + sigma}.  Report only: no constant is
    asserted.
    """
    sigma = Fraction(sigma)
    if not 0 <= sigma <= 1:
        raise InvalidInput("sigma must lie in [0, 1], not %s" % sigma)
    system = PhaseSystem.parabola()
    rows = []
    for K in K_list:  # pylint: disable=invalid-name
        scale = ScaleSpec(p, K)
        N = scale.N  # pylint: disable=invalid-name
        omega = IndexDomain.box(N, 1)
        estimate = estimate_restriction_constant(
            system, omega, r, scale, LocalizationVector((0, sigma)), side,
            samplers, seed, samples, quad, threads,
        )
        envelope = float(N) ** (r / 2) + float(N) ** (r - 4 + float(sigma))
        for sampler, sample in best_per_sampler(estimate).items():
            rows.append((
                "corollary-ratio", p, K, sigma, float(r), sampler, seed,
                sample.value, sample.denominator, sample.ratio, sample.error_bound,
                envelope,
            ))
    return rows


def epsilons(system, omega, scale):
    """
    epsilon_j = 1 / max(1, max_n |P_j(n / N)|), with P_j the raw
    (scale-reapplied) component: P_j(n / N) = scale_j P_j(n) / N^{|e_j|}
    """
    N = scale.N  # pylint: disable=invalid-name
    result = []
    for j, component in enumerate(system.components):
        largest = max(
            abs(component.scale * evaluate_phase(system, point)[j]) for point in omega
        )
        result.append(1 / max(Fraction(1), Fraction(largest) / N ** component.degree))
    return tuple(result)


NBYA_HEADER = [
    "sampler", "seed", "padic_ratio", "real_ratio", "real_error_bound",
    "factor", "factor_times_real", "abyn_sampled", "nbya_sampled",
]


def nbya_report(system, omega, r, scale, sigma, samplers=SAMPLERS, seed=0, samples=4,
                quad=None, threads=None):
    """
    Tabulate sampled lower bounds of both restriction constants against
    the factor 2^{(r+1)k} / prod_j epsilon_j.

    Lower bounds cannot falsify D^p <= factor * D^real: the comparison
    columns only record whether the sampled values happen to respect it.
    Returns (rows, epsilons, factor).
    """
    padic = best_per_sampler(
        estimate_restriction_constant(system, omega, r, scale, sigma, PADIC, samplers,
                                      seed, samples, quad, threads)
    )
    real = best_per_sampler(
        estimate_restriction_constant(system, omega, r, scale, sigma, REAL, samplers,
                                      seed, samples, quad, threads)
    )
    eps = epsilons(system, omega, scale)
    product = Fraction(1)
    for epsilon in eps:
        product *= epsilon
    factor = 2.0 ** ((r + 1) * system.k) / float(product)
    rows = []
    for sampler in padic:
        padic_ratio = padic[sampler].ratio
        real_sample = real[sampler]
        rows.append((
            sampler, seed, padic_ratio, real_sample.ratio, real_sample.error_bound,
            factor, factor * real_sample.ratio,
            real_sample.ratio <= padic_ratio + real_sample.error_bound,
            padic_ratio <= factor * real_sample.ratio,
        ))
    return rows, eps, factor


def canonical_moment_check(k, scale, s, threads=None):
    """
    sigma = 0 moment curve check with a = 1 and r = 2s
    """
    N = scale.N  # pylint: disable=invalid-name
    system = PhaseSystem.moment_curve(k)
    omega = IndexDomain.box(N, 1)
    report = padic_short_mv(
        system, omega, CoefficientVector.constant(omega, 1), 2 * s, scale,
        LocalizationVector.zero(k), threads,
    )
    record = count_solutions(MinimalPolynomial((0,)), s, k, N, threads=threads)
    envelope = (1 + float(N) ** (s - k * (k + 1))) * float(N) ** s
    return CanonicalCheck(k, N, s, report.value, record.J, envelope)
