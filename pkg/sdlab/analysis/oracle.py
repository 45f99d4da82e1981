# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Closed-form solutions of the homogeneous radial problem and manufactured
solutions for the verification of the solvers.

For radial functions the drift operator reduces to

    -(v'' + (1 + alpha) v' / r)

whose solutions are c1 r^-alpha + c2 (alpha != 0) and c1 ln r + c2
(alpha = 0). For alpha < 0 the functions c (r^|alpha| - 1) vanish on the
boundary and span the kernel of the unpinned problem.
"""

import numpy as np

from sdlab.discretization.field import DiscreteField
from sdlab.error import AnalysisError
from sdlab.profile.base import ManufacturedSource, RadialProfile

import sdlab.profile.declaration as pd
import sdlab.profile.util as putil


"""Exact solutions that are admitted for manufactured problems."""
MANUFACTURED_SOLUTIONS = [
    pd.ONE_MINUS_R2,
    pd.R2_ONE_MINUS_R,
    pd.KERNEL_WEIGHTED
]


def kernel_solution(alpha, c, grid):
    """Nodal values of c (r^|alpha| - 1).

    Parameters
    ----------
    alpha: float
        Coefficient of the singular drift (alpha < 0)
    c: float
        Scaling factor
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    sdlab.discretization.field.DiscreteField

    Raises
    ------
    sdlab.error.AnalysisError
    """
    if alpha >= 0:
        raise AnalysisError('kernel solutions exist only for alpha < 0')
    values = c * (grid.r ** abs(alpha) - 1.0)
    values[grid.boundary] = 0.0
    values[0] = -c
    return DiscreteField(grid, values)


def kernel_energy_norm(alpha, c):
    """Exact energy norm (||grad u||^2 + ||u||^2)^(1/2) of c (r^a - 1) with
    a = |alpha| over the unit disk.

    Parameters
    ----------
    alpha: float
        Coefficient of the singular drift (alpha < 0)
    c: float
        Scaling factor

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.AnalysisError
    """
    if alpha >= 0:
        raise AnalysisError('kernel solutions exist only for alpha < 0')
    a = abs(alpha)
    gradient = np.pi * a
    mass = 2.0 * np.pi * (1.0 / (2.0 * a + 2.0) - 2.0 / (a + 2.0) + 0.5)
    return float(abs(c) * np.sqrt(gradient + mass))


def radial_family(alpha, c1, c2, grid, center_value=None):
    """Nodal values of the radial solutions c1 r^-alpha + c2 (alpha != 0) or
    c1 ln r + c2 (alpha = 0) of the homogeneous radial equation.

    The value at the center is the limit of the formula if it exists. For
    diverging formulas the caller has to provide the center value.

    Parameters
    ----------
    alpha: float
        Coefficient of the singular drift
    c1: float
        Coefficient of the non-constant solution
    c2: float
        Constant
    grid: sdlab.discretization.grid.Grid
        Polar grid
    center_value: float, optional
        Value at the center node for formulas that diverge at the origin

    Returns
    -------
    sdlab.discretization.field.DiscreteField

    Raises
    ------
    sdlab.error.AnalysisError
    """
    r = grid.r[1:]
    values = np.empty(grid.node_count)
    if alpha == 0:
        values[1:] = c1 * np.log(r) + c2
    else:
        values[1:] = c1 * r ** -alpha + c2
    if c1 == 0 or alpha < 0:
        values[0] = c2
    elif not center_value is None:
        values[0] = center_value
    else:
        raise AnalysisError(
            'radial solution diverges at the origin (alpha={}, c1={})'.format(
                alpha,
                c1
            )
        )
    return DiscreteField(grid, values)


def manufactured(u_star, spec, pinned=False):
    """Source and exact solution of a manufactured problem. The drift may
    contain a swirl since the swirl is orthogonal to radial gradients.

    Parameters
    ----------
    u_star: dict, string, or sdlab.profile.base.RadialProfile
        Exact solution from the manufactured catalog
    spec: sdlab.drift.base.DriftSpec
        Drift specification
    pinned: bool, optional
        Only admit exact solutions that vanish at the origin

    Returns
    -------
    (sdlab.profile.base.ManufacturedSource, sdlab.profile.base.RadialProfile)

    Raises
    ------
    sdlab.error.AnalysisError
    """
    if not isinstance(u_star, RadialProfile):
        u_star = putil.create_profile(u_star)
    if not u_star.identifier in MANUFACTURED_SOLUTIONS:
        raise AnalysisError(
            'no manufactured source for profile \'{}\''.format(u_star.identifier)
        )
    if not (spec.divfree.is_none() or spec.divfree.is_swirl()):
        raise AnalysisError(
            'manufactured sources require b = 0 or a swirl (got \'{}\')'.format(
                spec.divfree.type_id
            )
        )
    if pinned and u_star.center_value() != 0:
        raise AnalysisError(
            'profile \'{}\' does not vanish at the origin'.format(u_star.identifier)
        )
    g = ManufacturedSource(u_star, alpha=spec.alpha, epsilon=spec.epsilon)
    return g, u_star
