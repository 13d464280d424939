"""
Tests for exact rationals and phases modulo 1
"""
from fractions import Fraction

import pytest


def test_as_rational():
    from mvlab.models.rational import as_rational
    from mvlab.utils.exceptions import InvalidInput

    assert as_rational(3) == Fraction(3)
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(" -4/2 ") == Fraction(-2)
    assert as_rational(0.5) == Fraction(1, 2)
    with pytest.raises(InvalidInput):
        as_rational("1/0")
    with pytest.raises(InvalidInput):
        as_rational("one")


def test_format_rational():
    from mvlab.models.rational import format_rational

    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 9)) == "-1/3"


def test_phase_fraction_reduces_modulo_one():
    from mvlab.models.rational import PhaseFraction

    assert PhaseFraction(Fraction(7, 4)).value == Fraction(3, 4)
    assert PhaseFraction(Fraction(-1, 4)).value == Fraction(3, 4)
    assert PhaseFraction.of("5/5").value == 0

    quarter = PhaseFraction.of("1/4")
    assert (quarter + Fraction(7, 8)).value == Fraction(1, 8)
    assert (quarter - PhaseFraction.of("1/2")).value == Fraction(3, 4)
    assert (-quarter).value == Fraction(3, 4)
    assert (quarter * 6).value == Fraction(1, 2)
    assert (6 * quarter).denominator == 2
    assert str(quarter) == "1/4"
