"""
Tests for unit roots and reproducible sums
"""
from fractions import Fraction

import numpy as np
import pytest


def test_unit_root_is_exact_at_quarter_periods():
    from mvlab.tasks.exact import unit_root

    assert complex(unit_root(0)) == 1
    assert complex(unit_root(Fraction(1, 2))) == -1
    assert complex(unit_root(Fraction(1, 4))) == 1j
    assert complex(unit_root(Fraction(5, 4))) == 1j
    assert complex(unit_root(Fraction(1, 3))) == pytest.approx(
        complex(-0.5, 3 ** 0.5 / 2), abs=1e-15
    )


def test_unit_root_precision():
    import mpmath

    from mvlab.tasks.exact import unit_root

    with mpmath.workprec(200):
        reference = mpmath.expjpi(mpmath.mpf(2) / 7)
        value = unit_root(Fraction(1, 7), precision=200)
        assert abs(value - reference) < mpmath.mpf(2) ** -190


def test_unit_root_table_is_cached_and_read_only():
    from mvlab.tasks.exact import unit_root_table

    table = unit_root_table(8, 64)
    assert table is unit_root_table(8, 64)
    assert table.shape == (8,)
    assert table[2] == 1j
    assert np.allclose(np.abs(table), 1.0)
    with pytest.raises(ValueError):
        table[0] = 0


def test_compensated_sum():
    from mvlab.tasks.exact import chunk_ranges, compensated_sum

    assert chunk_ranges(5, 2) == [(0, 2), (2, 4), (4, 5)]
    assert compensated_sum([]) == 0j
    values = [1.0, 1e100, 1.0, -1e100] * 1024 + [0.5j]
    assert compensated_sum(values) == complex(2048.0, 0.5)


def test_modulus_power():
    from mvlab.tasks.exact import modulus_power

    squared = np.array([0.0, 4.0, 9.0])
    assert list(modulus_power(squared, 4)) == [0.0, 16.0, 81.0]
    assert modulus_power(squared, 3) == pytest.approx([0.0, 8.0, 27.0])
    assert modulus_power(squared, 2.5)[0] == 0.0


def test_column_tree_sum():
    from mvlab.tasks.exact import column_tree_sum

    partials = [np.array([1e16, 1.0]), np.array([1.0, 2.0]), np.array([-1e16, 3.0])]
    assert list(column_tree_sum(partials)) == [1.0, 6.0]
    assert len(column_tree_sum([])) == 0


def test_unit_roots_are_multiplicative():
    import mpmath

    from mvlab.tasks.exact import unit_root

    rng = np.random.default_rng(7)
    precision = 64
    tolerance = 4 * mpmath.mpf(2) ** -(precision - 1)
    for _ in range(200):
        first, second = (
            Fraction(int(rng.integers(0, den)), den)
            for den in (int(d) for d in rng.integers(1, 10 ** 6 + 1, size=2))
        )
        with mpmath.workprec(precision):
            product = unit_root(first, precision) * unit_root(second, precision)
            expected = unit_root(first + second, precision)
            assert abs(product.real - expected.real) <= tolerance
            assert abs(product.imag - expected.imag) <= tolerance


def test_eighth_roots_of_unity_sum_to_zero():
    from mvlab.tasks.exact import compensated_sum, unit_root

    roots = [complex(unit_root(Fraction(k, 8))) for k in range(8)]
    assert abs(compensated_sum(roots)) < 1e-12
    assert abs(sum(roots)) < 1e-12


def test_compensated_sum_is_permutation_invariant():
    from mvlab.tasks.exact import compensated_sum

    rng = np.random.default_rng(3)
    # one chunk: math.fsum is correctly rounded, so the order cannot matter
    values = list(rng.normal(size=1000) * 10.0 ** rng.integers(-8, 8, size=1000))
    total = compensated_sum(values)
    for _ in range(5):
        assert compensated_sum(list(rng.permutation(values))) == total

    angles = rng.random(20000)
    terms = list(np.exp(2j * np.pi * angles))
    total = compensated_sum(terms)
    for _ in range(5):
        shuffled = compensated_sum(list(rng.permutation(terms)))
        assert abs(shuffled - total) <= 1e-12 * abs(total)
