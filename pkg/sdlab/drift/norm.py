# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Lebesgue norms of sampled vector fields. The weak L2 norm

    sup_lambda lambda * |{|b| > lambda}|^(1/2)

is evaluated on a logarithmic sweep of levels between the 1st and the 100th
percentile of the field magnitude. The measure of a level set is computed in
one of two ways:

- reconstructed: every cell is split into radial halves on which the magnitude
  is interpolated linearly between the node value and the mean of the node
  value and its radial neighbor. The measure of a half cell is its weight times
  the fraction on which the interpolant exceeds the level.
- nodal: the sum of the quadrature weights of all nodes whose magnitude
  exceeds the level.

Both variants take the measure of the strict level set {|b| > lambda}. A
field of constant magnitude is swept over the two decades below its value.
"""

import numpy as np

from sdlab.error import InvalidDriftError

import sdlab.discretization.operators as op


"""Identifier for level set measures."""
METHOD_NODAL = 'nodal'
METHOD_RECONSTRUCTED = 'reconstructed'

METHODS = [METHOD_NODAL, METHOD_RECONSTRUCTED]


"""Default number of levels in the sweep."""
SWEEP_POINTS = 200


def l2_norm(field, grid):
    """Quadrature L2 norm of a sampled vector field.

    Parameters
    ----------
    field: sdlab.drift.base.VectorFieldSample
        Sampled vector field
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    float
    """
    mag = grid.check(field.magnitude())
    return float(np.sqrt(np.dot(grid.quad_weights, mag ** 2)))


def level_sweep(magnitude, points=SWEEP_POINTS):
    """Logarithmic sweep of levels between the 1st and the 100th percentile
    of the given magnitudes. If the first percentile is zero the smallest
    positive magnitude is used as the lower end. Constant magnitudes are
    swept over the two decades below their value.

    Parameters
    ----------
    magnitude: numpy.ndarray
        Nodal magnitudes
    points: int, optional
        Number of levels

    Returns
    -------
    numpy.ndarray
    """
    positive = magnitude[magnitude > 0]
    if positive.size == 0:
        return np.zeros(0)
    upper = float(np.max(magnitude))
    lower = float(np.percentile(magnitude, 1))
    if lower <= 0:
        lower = float(np.min(positive))
    if lower >= upper:
        lower = 1e-2 * upper
    return np.logspace(np.log10(lower), np.log10(upper), points)


def weak_l2_norm(field, grid, method=METHOD_RECONSTRUCTED, points=SWEEP_POINTS):
    """Weak L2 norm of a sampled vector field.

    Parameters
    ----------
    field: sdlab.drift.base.VectorFieldSample
        Sampled vector field
    grid: sdlab.discretization.grid.Grid
        Polar grid
    method: string, optional
        Level set measure (reconstructed or nodal)
    points: int, optional
        Number of levels in the sweep

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.InvalidDriftError
    """
    if not method in METHODS:
        raise InvalidDriftError('unknown level set method \'{}\''.format(method))
    mag = field.magnitude()
    if mag.size == 0:
        raise InvalidDriftError('empty field')
    mag = grid.check(mag)
    levels = level_sweep(mag, points=points)
    if levels.size == 0:
        return 0.0
    if method == METHOD_NODAL:
        measure = _nodal_measure(mag, grid)
    else:
        measure = _reconstructed_measure(mag, grid)
    result = 0.0
    for level in levels:
        result = max(result, level * np.sqrt(measure(level)))
    return float(result)


def _nodal_measure(mag, grid):
    """Level set measure from nodal values."""
    weights = grid.quad_weights

    def measure(level):
        return np.sum(weights[mag > level])

    return measure


def _reconstructed_measure(mag, grid):
    """Level set measure of the piecewise linear reconstruction on half
    cells.
    """
    F = op.ring_matrix(grid, mag)
    W = grid.as_rings(grid.quad_weights)
    n = grid.n_r
    # Center cell up to the edge with ring 1
    a = [np.array([mag[0]])]
    b = [np.array([0.5 * (mag[0] + np.mean(F[1, :]))])]
    w = [np.array([grid.quad_weights[0]])]
    # Inner halves of all rings; the boundary cell has no outer half
    inner_weight = 0.5 * W.copy()
    inner_weight[-1, :] = W[-1, :]
    a.append(F[1:, :].ravel())
    b.append((0.5 * (F[1:, :] + F[:-1, :])).ravel())
    w.append(inner_weight.ravel())
    # Outer halves of interior rings
    a.append(F[1:n, :].ravel())
    b.append((0.5 * (F[1:n, :] + F[2:, :])).ravel())
    w.append(0.5 * W[:-1, :].ravel())
    a = np.concatenate(a)
    b = np.concatenate(b)
    w = np.concatenate(w)
    hi = np.maximum(a, b)
    lo = np.minimum(a, b)
    spread = hi - lo
    flat = spread == 0
    safe = np.where(flat, 1.0, spread)

    def measure(level):
        fraction = np.clip((hi - level) / safe, 0.0, 1.0)
        fraction = np.where(flat, (hi > level).astype(float), fraction)
        return np.dot(w, fraction)

    return measure
