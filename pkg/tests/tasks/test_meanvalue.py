"""
Tests for p-adic and real mean values and the transference check
"""
from fractions import Fraction
from itertools import product

import pytest


def congruence_count(N):
    """
    Solutions of n1 + n2 = m1 + m2 mod N, n1^2 + n2^2 = m1^2 + m2^2 mod N^2
    """
    return sum(
        1
        for n1, n2, m1, m2 in product(range(N), repeat=4)
        if (n1 + n2 - m1 - m2) % N == 0
        and (n1 * n1 + n2 * n2 - m1 * m1 - m2 * m2) % (N * N) == 0
    )


def parabola_inputs(p, K):
    from mvlab.models.coefficients import IndexDomain
    from mvlab.models.phasesystem import PhaseSystem
    from mvlab.models.scale import LocalizationVector, ScaleSpec

    scale = ScaleSpec(p, K)
    return (
        PhaseSystem.parabola(), IndexDomain.box(scale.N, 1), scale,
        LocalizationVector.zero(2),
    )


@pytest.mark.parametrize("p,K", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_padic_orthogonality(p, K):
    from mvlab.tasks.meanvalue import padic_short_mv
    from mvlab.tasks.samplers import sample_coefficients

    system, omega, scale, sigma = parabola_inputs(p, K)
    for sampler in ("random-phases", "random-sparse"):
        a = sample_coefficients(sampler, omega, seed=11, index=2)
        report = padic_short_mv(system, omega, a, 2, scale, sigma)
        assert report.value == pytest.approx(a.norm_power(2), rel=1e-9)
        assert report.method == "padic-exact"
        assert report.quadrature_error_bound == 0
        assert report.cells == scale.N ** 3


def test_padic_counts_congruence_solutions():
    from mvlab.tasks.meanvalue import ones, padic_short_mv

    system, omega, scale, sigma = parabola_inputs(3, 1)
    assert padic_short_mv(system, omega, ones(omega), 4, scale, sigma).value == (
        pytest.approx(15, rel=1e-12)
    )
    assert congruence_count(3) == 15

    system, omega, scale, sigma = parabola_inputs(3, 2)
    value = padic_short_mv(system, omega, ones(omega), 4, scale, sigma).value
    assert value == pytest.approx(congruence_count(9), rel=1e-12)
    # (5, 8) and (2, 2) agree modulo 9 and 81 but not over the integers
    assert value > 2 * 9 ** 2 - 9


def test_real_mean_value_counts_integer_solutions():
    from mvlab.models.quadrature import QuadratureConfig
    from mvlab.tasks.meanvalue import ones, real_sparse_mv

    system, omega, scale, sigma = parabola_inputs(3, 2)
    report = real_sparse_mv(system, omega, ones(omega), 4, scale, sigma)
    assert report.value == pytest.approx(153, rel=1e-9)
    assert report.method == "real-torus"
    assert report.quadrature_error_bound == 0
    assert report.cells == 27 * 243

    quadrature = real_sparse_mv(
        system, omega, ones(omega), 4, scale, sigma, quad=QuadratureConfig(depth=3)
    )
    assert quadrature.value == pytest.approx(153, rel=1e-5)
    assert quadrature.value / 9 == pytest.approx(17, rel=1e-5)
    assert quadrature.quadrature_error_bound < 1
    assert quadrature.method == "real-quadrature"
    assert quadrature.depths == (3, 3)
    assert quadrature.nodes == 1024


@pytest.mark.parametrize("p,K", [(3, 1), (3, 2)])
def test_real_equals_padic_for_squares(p, K):
    from mvlab.tasks.meanvalue import padic_short_mv, real_sparse_mv
    from mvlab.tasks.samplers import sample_coefficients

    system, omega, scale, sigma = parabola_inputs(p, K)
    a = sample_coefficients("random-phases", omega, seed=5)
    real = real_sparse_mv(system, omega, a, 2, scale, sigma).value
    padic = padic_short_mv(system, omega, a, 2, scale, sigma).value
    assert real == pytest.approx(padic, rel=1e-6)
    assert real == pytest.approx(a.norm_power(2), rel=1e-6)


@pytest.mark.parametrize("k", [2, 3])
def test_real_equals_padic_at_small_scale(k):
    from mvlab.models.coefficients import IndexDomain
    from mvlab.models.phasesystem import PhaseSystem
    from mvlab.models.scale import LocalizationVector, ScaleSpec
    from mvlab.tasks.meanvalue import ones, padic_short_mv, real_sparse_mv
    from mvlab.tasks.samplers import sample_coefficients

    scale = ScaleSpec(3, 1)
    system = PhaseSystem.moment_curve(k)
    omega = IndexDomain.box(3, 1)
    sigma = LocalizationVector.zero(k)
    for a in (ones(omega), sample_coefficients("random-phases", omega, seed=1)):
        real = real_sparse_mv(system, omega, a, 4, scale, sigma)
        padic = padic_short_mv(system, omega, a, 4, scale, sigma)
        assert real.value == pytest.approx(padic.value, rel=1e-6)
    assert padic_short_mv(system, omega, ones(omega), 4, scale, sigma).value == (
        pytest.approx(15, rel=1e-12)
    )


def test_modulation_and_scaling():
    from mvlab.tasks.meanvalue import modulate_coefficients, padic_short_mv
    from mvlab.tasks.samplers import sample_coefficients

    system, omega, scale, sigma = parabola_inputs(3, 1)
    a = sample_coefficients("random-sparse", omega, seed=3)
    value = padic_short_mv(system, omega, a, 4, scale, sigma).value

    shifted = modulate_coefficients(a, (Fraction(1, 3), Fraction(2, 9)), system)
    assert list(shifted.moduli()) == list(a.moduli())
    assert padic_short_mv(system, omega, shifted, 4, scale, sigma).value == (
        pytest.approx(value, rel=1e-9)
    )
    off_lattice = modulate_coefficients(a, (Fraction(1, 7), Fraction(1, 5)), system)
    assert off_lattice.norm_power(3) == a.norm_power(3)

    scaled = a.scaled(2j)
    assert padic_short_mv(system, omega, scaled, 3, scale, sigma).value == pytest.approx(
        8 * padic_short_mv(system, omega, a, 3, scale, sigma).value, rel=1e-9
    )


def test_transfer_check_parabola():
    from mvlab.models.coefficients import IndexDomain
    from mvlab.models.phasesystem import PhaseSystem
    from mvlab.models.scale import LocalizationVector, ScaleSpec
    from mvlab.tasks.meanvalue import SparseQuadrature, transfer_check
    from mvlab.tasks.samplers import sample_coefficients

    scale = ScaleSpec(3, 2)
    system = PhaseSystem.parabola()
    omega = IndexDomain.box(9, 1)
    sigma = LocalizationVector((0, 1))
    quadrature = SparseQuadrature(system, omega, 4, scale, sigma)
    for index in range(50):
        a = sample_coefficients("random-phases", omega, seed=0, index=index)
        report = transfer_check(system, omega, a, 4, scale, sigma, quadrature=quadrature)
        assert report.passed
        assert report.grid_size == len(quadrature.fine)
        assert report.real_value <= report.padic_sup_over_grid * (1 + 1e-6) + 1e-9

    a = sample_coefficients("random-phases", omega, seed=0)
    report = transfer_check(
        system, omega, a, 4, scale, sigma, grid=[(0, 0), (Fraction(1, 40), 0)],
        quadrature=quadrature,
    )
    assert report.grid_size == 2
    assert report.padic_sup_over_grid >= report.padic_at_zero * (1 - 1e-12)


def test_transfer_check_moment_curve():
    from mvlab.models.coefficients import IndexDomain
    from mvlab.models.phasesystem import PhaseSystem
    from mvlab.models.scale import LocalizationVector, ScaleSpec
    from mvlab.tasks.meanvalue import SparseQuadrature, transfer_check
    from mvlab.tasks.samplers import sample_coefficients

    system = PhaseSystem.moment_curve(3)
    omega = IndexDomain.box(3, 1)
    scale = ScaleSpec(3, 1)
    sigma = LocalizationVector((0, 0, 1))
    quadrature = SparseQuadrature(system, omega, 4, scale, sigma)
    for index in range(50):
        a = sample_coefficients("random-phases", omega, seed=0, index=index)
        report = transfer_check(system, omega, a, 4, scale, sigma, quadrature=quadrature)
        assert report.passed, index
        assert report.real_value <= report.padic_sup_over_grid * (1 + 1e-6) + 1e-9
    assert report.tolerance == 1e-6


def test_invalid_mean_value_inputs():
    from mvlab.models.coefficients import IndexDomain
    from mvlab.models.phasesystem import MonomialTerm, PhaseComponent, PhaseSystem
    from mvlab.tasks.meanvalue import SparseQuadrature, ones, padic_short_mv
    from mvlab.utils.exceptions import BudgetExceeded, InvalidInput

    system, omega, scale, sigma = parabola_inputs(3, 1)
    with pytest.raises(InvalidInput):
        padic_short_mv(system, omega, ones(omega), 1.5, scale, sigma)

    halves = PhaseSystem(1, (PhaseComponent(1, (MonomialTerm((1,), "1/2"),)),))
    with pytest.raises(InvalidInput):
        padic_short_mv(halves, omega, ones(omega), 2, scale, (0,))

    plane = IndexDomain.box(3, 2)
    with pytest.raises(InvalidInput):
        padic_short_mv(system, plane, ones(plane), 2, scale, sigma)

    from mvlab.models.scale import LocalizationVector, ScaleSpec

    moment = PhaseSystem.moment_curve(3)
    with pytest.raises(BudgetExceeded) as excinfo:
        SparseQuadrature(
            moment, IndexDomain.box(9, 1), 4, ScaleSpec(3, 2), LocalizationVector.zero(3)
        )
    assert excinfo.value.what == "cell-node evaluations"


def test_torus_grid_sizes():
    from mvlab.models.phasesystem import PhaseSystem
    from mvlab.tasks.algebra import evaluate_phase
    from mvlab.tasks.meanvalue import torus_counts

    values = [evaluate_phase(PhaseSystem.parabola(), (n,)) for n in range(9)]
    assert torus_counts(values, 4, 3) == (27, 243)
    assert torus_counts(values, 2, 3) == (9, 81)
    moment = [evaluate_phase(PhaseSystem.moment_curve(3), (n,)) for n in range(9)]
    assert torus_counts(moment, 2, 3) == (9, 81, 729)


def test_real_mean_value_of_cubic_moment_curve_at_r_2():
    from mvlab.models.coefficients import IndexDomain
    from mvlab.models.phasesystem import PhaseSystem
    from mvlab.models.scale import LocalizationVector, ScaleSpec
    from mvlab.tasks.meanvalue import ones, padic_short_mv, real_sparse_mv
    from mvlab.tasks.samplers import sample_coefficients

    scale = ScaleSpec(3, 2)
    system = PhaseSystem.moment_curve(3)
    omega = IndexDomain.box(9, 1)
    sigma = LocalizationVector.zero(3)
    for a in (ones(omega), sample_coefficients("random-phases", omega, seed=4)):
        real = real_sparse_mv(system, omega, a, 2, scale, sigma)
        assert real.method == "real-torus"
        assert real.quadrature_error_bound == 0
        assert real.cells == 9 * 81 * 729
        assert real.value == pytest.approx(a.norm_power(2), rel=1e-9)
        padic = padic_short_mv(system, omega, a, 2, scale, sigma)
        assert real.value == pytest.approx(padic.value, rel=1e-9)


def test_torus_mean_value_rejects_odd_exponents():
    from mvlab.tasks.meanvalue import ones, real_sparse_mv, torus_mv
    from mvlab.utils.exceptions import BudgetExceeded, InvalidInput

    system, omega, scale, sigma = parabola_inputs(3, 1)
    with pytest.raises(InvalidInput):
        torus_mv(system, omega, ones(omega), 3, scale)
    with pytest.raises(BudgetExceeded) as excinfo:
        torus_mv(system, omega, ones(omega), 4, scale, budget=80)
    assert excinfo.value.what == "torus grid points"
    # odd r falls back to quadrature
    assert real_sparse_mv(system, omega, ones(omega), 3, scale, sigma).method == (
        "real-quadrature"
    )


def test_precision_above_double_keeps_extra_digits():
    import mpmath

    from mvlab.models.coefficients import IndexDomain
    from mvlab.models.phasesystem import PhaseSystem
    from mvlab.models.scale import LocalizationVector, ScaleSpec
    from mvlab.tasks.meanvalue import padic_short_mv
    from mvlab.tasks.samplers import sample_coefficients

    system = PhaseSystem.moment_curve(3)
    omega = IndexDomain.box(5, 1)
    scale = ScaleSpec(5, 1)
    sigma = LocalizationVector.zero(3)
    a = sample_coefficients("random-phases", omega, seed=2)
    double = padic_short_mv(system, omega, a, 3, scale, sigma, precision=64)
    assert double.value_text is None
    wide = padic_short_mv(system, omega, a, 3, scale, sigma, precision=200)
    assert wide.value_text is not None
    assert len(wide.value_text) > 30
    assert wide.value == pytest.approx(double.value, rel=1e-12)
    with mpmath.workprec(200):
        assert abs(mpmath.mpf(wide.value_text) - double.value) < 1e-12 * double.value


def test_high_precision_counts_are_exact_to_many_digits():
    import mpmath

    from mvlab.tasks.meanvalue import ones, padic_short_mv, real_sparse_mv

    system, omega, scale, sigma = parabola_inputs(3, 1)
    padic = padic_short_mv(system, omega, ones(omega), 4, scale, sigma, precision=200)
    real = real_sparse_mv(system, omega, ones(omega), 4, scale, sigma, precision=200)
    assert real.method == "real-torus"
    with mpmath.workprec(200):
        for report in (padic, real):
            assert abs(mpmath.mpf(report.value_text) - 15) < mpmath.mpf(10) ** -40
