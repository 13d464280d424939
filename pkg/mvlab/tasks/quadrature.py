"""
Tensor-product Gauss-Legendre rules on the centered cell
R = prod_j [-h_j, h_j), with dyadic subdivision per axis.

Weights are normalized to sum to 1, so a rule computes the average of
an integrand over R.
"""
from dataclasses import dataclass
from math import ceil
from typing import Tuple

import numpy as np
from scipy.special import roots_legendre

from ..logs import logger


@dataclass(frozen=True)
class QuadratureRule:
    """
    Nodes (rows of shape (count, k)) and normalized weights
    """

    nodes: np.ndarray
    weights: np.ndarray
    depths: Tuple[int, ...]

    def __len__(self):
        return len(self.weights)


def axis_rule(halfwidth, depth, order):
    """
    Composite Gauss-Legendre nodes and weights on [-h, h) with
    2^depth subcells, weights summing to 1
    """
    roots, weights = roots_legendre(order)
    subcells = 2 ** depth
    width = 2 * halfwidth / subcells
    centers = -halfwidth + (np.arange(subcells) + 0.5) * width
    nodes = (centers[:, None] + (width / 2) * roots[None, :]).ravel()
    node_weights = np.tile(weights / 2, subcells) / subcells
    return nodes, node_weights


def tensor_rule(halfwidths, depths, order):
    """
    Tensor product of axis rules, nodes in lexicographic order
    """
    axes = [
        axis_rule(float(h), depth, order) for h, depth in zip(halfwidths, depths)
    ]
    grids = np.meshgrid(*(nodes for nodes, _ in axes), indexing="ij")
    nodes = np.stack([grid.ravel() for grid in grids], axis=1)
    weight_grids = np.meshgrid(*(weights for _, weights in axes), indexing="ij")
    weights = np.prod(np.stack([grid.ravel() for grid in weight_grids], axis=1), axis=1)
    return QuadratureRule(nodes, weights, tuple(depths))


def choose_depths(halfwidths, phase_bounds, r, config):
    """
    Per-axis subdivision depths.

    The integrand |sum_n b_n e(y . P(n))|^r oscillates in y_j with
    frequency at most ceil(r/2) * max_n |P_j(n)|; depth s_j is the
    smallest s with (2 h_j / 2^s) times that bound <= config.variation.
    """
    if config.depth is not None:
        return tuple(int(config.depth) for _ in halfwidths)
    multiplier = max(1, ceil(r / 2))
    depths = []
    for halfwidth, bound in zip(halfwidths, phase_bounds):
        depth = 0
        width = 2 * halfwidth
        while width * multiplier * bound > config.variation:
            width /= 2
            depth += 1
        depths.append(depth)
    return tuple(depths)


def richardson_pair(halfwidths, depths, order):
    """
    The fine rule at `depths` and the coarse rule one level down on every
    axis; when all depths are 0 the fine level moves up to 1 so the two
    rules differ
    """
    if not any(depths):
        depths = tuple(1 for _ in depths)
    coarse = tuple(max(depth - 1, 0) for depth in depths)
    fine_rule = tensor_rule(halfwidths, depths, order)
    coarse_rule = tensor_rule(halfwidths, coarse, order)
    logger.debug(
        "Quadrature depths %s (%s nodes), coarse %s (%s nodes)"
        % (depths, len(fine_rule), coarse, len(coarse_rule))
    )
    return fine_rule, coarse_rule
