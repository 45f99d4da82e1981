# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Quadrature of the drift bilinear form

    B_alpha[u, eta] = integral of (b_alpha . grad u) eta over the disk

with the regularized drift and centered gradients. For radial v vanishing on
the boundary the quadratic form B_alpha[v, v] tends to kappa alpha v(0)^2 as
epsilon tends to 0. The limit is obtained by Richardson extrapolation in
epsilon^2 from a decreasing sequence of regularization parameters.
"""

import logging
import numpy as np

from sdlab.discretization.field import DiscreteField
from sdlab.drift.base import eval_drift
from sdlab.error import AnalysisError, GridMismatchError, InvalidDriftError

import sdlab.discretization.operators as op


logger = logging.getLogger(__name__)


"""Default sequence of regularization parameters for the extrapolation."""
EXTRAPOLATION_EPSILONS = [1e-2, 1e-3, 1e-4]


def bilinear_form(u, eta, spec, grid):
    """Quadrature of (b_alpha . grad u) eta with the regularized drift.

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Differentiated argument
    eta: sdlab.discretization.field.DiscreteField
        Test function
    spec: sdlab.drift.base.DriftSpec
        Drift specification (epsilon > 0 unless alpha = 0)
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.GridMismatchError
    sdlab.error.InvalidDriftError
    """
    u = _values(u, grid)
    eta = _values(eta, grid)
    if spec.epsilon <= 0 and spec.alpha != 0:
        raise InvalidDriftError('bilinear form requires epsilon > 0')
    sample = eval_drift(spec, grid)
    g_r, g_t = op.gradient(grid, u)
    integrand = (sample.radial * g_r + sample.angular * g_t) * eta
    return float(np.dot(grid.quad_weights, integrand))


def extrapolated_bilinear_form(u, eta, spec, grid, epsilons=None):
    """Limit of the bilinear form for epsilon to 0. The form is evaluated for
    each regularization parameter and the last two values are extrapolated
    with an error model c epsilon^2.

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Differentiated argument
    eta: sdlab.discretization.field.DiscreteField
        Test function
    spec: sdlab.drift.base.DriftSpec
        Drift specification. The regularization parameter is ignored.
    grid: sdlab.discretization.grid.Grid
        Polar grid
    epsilons: list(float), optional
        Strictly decreasing positive regularization parameters

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.InvalidDriftError
    """
    if epsilons is None:
        epsilons = EXTRAPOLATION_EPSILONS
    if len(epsilons) < 2:
        raise InvalidDriftError('extrapolation requires two or more epsilons')
    values = list()
    for eps in epsilons:
        values.append(bilinear_form(u, eta, spec.with_epsilon(eps), grid))
    e1, e2 = epsilons[-2] ** 2, epsilons[-1] ** 2
    b1, b2 = values[-2], values[-1]
    limit = (e1 * b2 - e2 * b1) / (e1 - e2)
    logger.debug('bilinear form values %s extrapolated to %g', values, limit)
    return float(limit)


def quadratic_form_constant(v, spec, grid, epsilons=None):
    """Ratio B_alpha[v, v] / (alpha v(0)^2) of the extrapolated quadratic form.

    Parameters
    ----------
    v: sdlab.discretization.field.DiscreteField
        Test function vanishing on the boundary with v(0) != 0
    spec: sdlab.drift.base.DriftSpec
        Drift specification with alpha != 0
    grid: sdlab.discretization.grid.Grid
        Polar grid
    epsilons: list(float), optional
        Regularization parameters for the extrapolation

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.AnalysisError
    """
    values = _values(v, grid)
    if spec.alpha == 0:
        raise AnalysisError('quadratic form constant undefined for alpha = 0')
    if values[0] == 0:
        raise AnalysisError('quadratic form constant undefined for v(0) = 0')
    b = extrapolated_bilinear_form(v, v, spec, grid, epsilons=epsilons)
    return b / (spec.alpha * values[0] ** 2)


def _values(field, grid):
    """Nodal values of a field that is expected to live on the given grid."""
    if isinstance(field, DiscreteField):
        if field.grid.shape() != grid.shape():
            raise GridMismatchError(grid.node_count, field.grid.node_count)
        return field.values
    return grid.check(field)
