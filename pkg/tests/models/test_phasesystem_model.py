"""
Tests for phase systems
"""
from fractions import Fraction

import pytest


def test_builtin_phase_systems():
    from mvlab.models.phasesystem import PhaseSystem

    parabola = PhaseSystem.parabola()
    assert parabola.variables == 1
    assert parabola.degrees == (1, 2)
    assert parabola.is_integral
    assert parabola.name == "parabola"

    moment = PhaseSystem.moment_curve(4)
    assert moment.degrees == (1, 2, 3, 4)
    assert moment.k == 4
    assert moment.components[2].evaluate((3,)) == 27

    paraboloid = PhaseSystem.paraboloid()
    assert paraboloid.variables == 2
    assert paraboloid.degrees == (1, 1, 2)
    assert paraboloid.components[2].evaluate((2, 3)) == 13
    assert paraboloid.scales == (1, 1, 1)

    # Names don't take part in equality
    assert PhaseSystem.moment_curve(2) == parabola


def test_phase_component_checks_homogeneity():
    from mvlab.models.phasesystem import MonomialTerm, PhaseComponent
    from mvlab.utils.exceptions import InvalidInput

    with pytest.raises(InvalidInput):
        PhaseComponent(2, (MonomialTerm((2, 0), 1), MonomialTerm((1, 0), 1)))
    with pytest.raises(InvalidInput):
        MonomialTerm((1, 1), 0)

    component = PhaseComponent(
        3, (MonomialTerm((3, 0), 1), MonomialTerm((1, 2), -3)), scale=2, label=(3, 0)
    )
    assert component.coefficient_map() == {(3, 0): 1, (1, 2): -3}
    assert component.evaluate((2, 1)) == 8 - 6
    assert component.scale == Fraction(2)
    assert str(component) == "n0^3 - 3*n0*n1^2"
    assert not PhaseComponent(1, (MonomialTerm((1,), "1/2"),)).is_integral


def test_phase_system_checks_dimensions():
    from mvlab.models.phasesystem import MonomialTerm, PhaseComponent, PhaseSystem
    from mvlab.utils.exceptions import InvalidInput

    with pytest.raises(InvalidInput):
        PhaseSystem(2, (PhaseComponent(1, (MonomialTerm((1,), 1),)),))
    with pytest.raises(InvalidInput):
        PhaseSystem(1, ())
    with pytest.raises(InvalidInput):
        PhaseSystem.moment_curve(0)
