"""
Sparse subdomains of the torus: construction, cell enumeration and
CSV emission of cell geometry (for external plotting).
"""
from itertools import product

import inflect

from ..logs import logger
from ..models.domain import SparseDomain
from ..models.rational import as_rational, format_rational
from ..models.scale import LocalizationVector
from ..utils.csvfiles import write_csv
from ..utils.exceptions import BudgetExceeded, InvalidInput


def build_domain(scale, sigma, degrees):
    """
    The domain with cell_counts[j] = N^{|e_j| - sigma_j} and
    cell_halfwidths[j] = N^{-|e_j|} / 2
    """
    if not isinstance(sigma, LocalizationVector):
        sigma = LocalizationVector(tuple(sigma))
    degrees = tuple(int(degree) for degree in degrees)
    if len(sigma) != len(degrees):
        raise InvalidInput(
            "sigma has %s entries but the phase system has %s components"
            % (len(sigma), len(degrees))
        )
    for j, (sigma_j, degree) in enumerate(zip(sigma, degrees), start=1):
        if not 0 <= sigma_j <= degree:
            raise InvalidInput(
                "sigma_%s = %s is outside [0, %s]" % (j, format_rational(sigma_j), degree)
            )
        if (sigma_j * scale.K).denominator != 1:
            raise InvalidInput(
                "sigma_%s * K = %s is not an integer"
                % (j, format_rational(sigma_j * scale.K))
            )
    cell_counts = tuple(
        int(scale.power(degree - sigma_j)) for sigma_j, degree in zip(sigma, degrees)
    )
    cell_halfwidths = tuple(scale.power(-degree) / 2 for degree in degrees)
    return SparseDomain(scale, sigma, degrees, cell_counts, cell_halfwidths)


def check_cell_budget(domain, budget=None):
    if budget is None:
        from ..conf import settings

        budget = settings.cell_budget
    if domain.total_cells > budget:
        raise BudgetExceeded("cells", domain.total_cells, budget)


def enumerate_cells(domain, budget=None):
    """
    Cells in lexicographic order of the index tuple iota
    """
    check_cell_budget(domain, budget)
    logger.debug(
        "Enumerating %s %s"
        % (domain.total_cells, inflect.engine().plural("cell", domain.total_cells))
    )
    for index in product(*(range(count) for count in domain.cell_counts)):
        yield domain.cell(index)


def cell_csv_header(k):
    return (
        ["iota_%s" % j for j in range(1, k + 1)]
        + ["center_%s" % j for j in range(1, k + 1)]
        + ["halfwidth_%s" % j for j in range(1, k + 1)]
    )


def emit_cell_csv(domain, path, config=None, budget=None):
    """
    One row per cell: iota, center and halfwidth components (rationals as "a/b")
    """
    rows = (
        list(cell.index) + list(cell.center) + list(cell.halfwidth)
        for cell in enumerate_cells(domain, budget)
    )
    write_csv(path, cell_csv_header(domain.k), rows, config)
    logger.info("Wrote %s cells to %s" % (domain.total_cells, path))
    return domain.total_cells


def parse_sigma(text, k):
    """
    sigma from a comma list of k rationals; a single "0" means sigma = 0
    """
    from ..utils.parsing import parse_rational_list

    values = parse_rational_list(text)
    if len(values) == 1 and values[0] == 0:
        values = values * k
    if len(values) != k:
        raise InvalidInput("Expected %s entries in sigma, got %s" % (k, len(values)))
    return LocalizationVector(tuple(as_rational(value) for value in values))
