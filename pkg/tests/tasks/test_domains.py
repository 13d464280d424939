"""
Tests for sparse domain construction and cell enumeration
"""
from fractions import Fraction

import pytest

from tests.utils import read_rows


def test_build_domain_rejects_bad_sigma():
    from mvlab.models.scale import ScaleSpec
    from mvlab.tasks.domains import build_domain
    from mvlab.utils.exceptions import InvalidInput

    scale = ScaleSpec(3, 2)
    with pytest.raises(InvalidInput) as excinfo:
        build_domain(scale, (0, Fraction(1, 3)), (1, 2))
    assert "not an integer" in str(excinfo.value)
    with pytest.raises(InvalidInput):
        build_domain(scale, (0, 3), (1, 2))
    with pytest.raises(InvalidInput):
        build_domain(scale, (0,), (1, 2))


@pytest.mark.parametrize(
    "p,K,sigma,degrees",
    [
        (3, 2, (0, 1), (1, 2)),
        (3, 2, (Fraction(1, 2), Fraction(3, 2)), (1, 2)),
        (5, 1, (0, 0, 1), (1, 2, 3)),
        (2, 3, (0, Fraction(1, 3), 1), (1, 1, 2)),
    ],
)
def test_domain_measure(p, K, sigma, degrees):
    from mvlab.models.scale import ScaleSpec
    from mvlab.tasks.domains import build_domain

    scale = ScaleSpec(p, K)
    domain = build_domain(scale, sigma, degrees)
    assert domain.measure == 1 / scale.power(sum(sigma))


def test_cells_are_disjoint():
    from mvlab.models.scale import ScaleSpec
    from mvlab.tasks.domains import build_domain, enumerate_cells

    domain = build_domain(ScaleSpec(2, 2), (0, 1), (1, 2))
    cells = list(enumerate_cells(domain))
    assert [cell.index for cell in cells] == [
        (i, j) for i in range(4) for j in range(4)
    ]
    for cell in cells:
        assert domain.locate(cell.center) == cell.index
        left_edge = tuple(c - h for c, h in zip(cell.center, cell.halfwidth))
        assert domain.locate(left_edge) == cell.index


def test_cell_budget():
    from mvlab.models.scale import ScaleSpec
    from mvlab.tasks.domains import build_domain, enumerate_cells
    from mvlab.utils.exceptions import BudgetExceeded

    domain = build_domain(ScaleSpec(3, 2), (0, 0), (1, 2))
    with pytest.raises(BudgetExceeded) as excinfo:
        next(enumerate_cells(domain, budget=100))
    assert excinfo.value.exit_code == 3
    assert excinfo.value.count == 729


def test_emit_cell_csv(tmp_path):
    from mvlab.models.scale import ScaleSpec
    from mvlab.tasks.domains import build_domain, emit_cell_csv

    domain = build_domain(ScaleSpec(3, 1), (0, 1), (1, 2))
    path = str(tmp_path / "cells.csv")
    assert emit_cell_csv(domain, path, {"command": "domain-cells"}) == 9
    comment, header, rows = read_rows(path)
    assert comment == "# command=domain-cells"
    assert header == [
        "iota_1", "iota_2", "center_1", "center_2", "halfwidth_1", "halfwidth_2",
    ]
    assert rows[0] == "0,0,0,0,1/6,1/18"
    assert rows[-1] == "2,2,2/3,2/3,1/6,1/18"


def test_parse_sigma():
    from mvlab.tasks.domains import parse_sigma
    from mvlab.utils.exceptions import InvalidInput

    assert parse_sigma("0", 3).sigma == (0, 0, 0)
    assert parse_sigma("0,1/2", 2).sigma == (0, Fraction(1, 2))
    with pytest.raises(InvalidInput):
        parse_sigma("1", 2)
    with pytest.raises(InvalidInput):
        parse_sigma("0,1,1", 2)
