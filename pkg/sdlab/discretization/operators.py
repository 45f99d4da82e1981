# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Finite difference operators on the polar grid. All operators take and
return plain nodal arrays.

Vector fields are given by their polar components (radial, angular) at ring
nodes. At the center node polar components are undefined; there the Cartesian
components (x, y) are stored in the (radial, angular) slots, which coincides
with the polar components along the ray theta = 0.

Radial derivatives are centered at interior rings (the center value enters the
stencil of ring 1) and one-sided of second order on the boundary ring. Angular
derivatives are centered and periodic. The gradient at the center is computed
from the first Fourier mode of the values on ring 1.
"""

import numpy as np


def ring_matrix(grid, values):
    """Get the values as a matrix of shape (n_r + 1, n_theta) where row 0
    repeats the center value.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    values: array-like
        Nodal values

    Returns
    -------
    numpy.ndarray
    """
    values = grid.check(values)
    U = np.empty((grid.n_r + 1, grid.n_theta))
    U[0, :] = values[0]
    U[1:, :] = values[1:].reshape(grid.n_r, grid.n_theta)
    return U


def radial_derivative(grid, values):
    """Partial derivative with respect to r at all ring nodes. The entry for
    the center node is 0.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    values: array-like
        Nodal values

    Returns
    -------
    numpy.ndarray
    """
    U = ring_matrix(grid, values)
    h = grid.h_r
    D = np.zeros_like(U)
    D[1:-1, :] = (U[2:, :] - U[:-2, :]) / (2.0 * h)
    D[-1, :] = (3.0 * U[-1, :] - 4.0 * U[-2, :] + U[-3, :]) / (2.0 * h)
    return grid.from_rings(0.0, D[1:, :])


def angular_derivative(grid, values):
    """Partial derivative with respect to theta at all ring nodes. The entry
    for the center node is 0.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    values: array-like
        Nodal values

    Returns
    -------
    numpy.ndarray
    """
    U = grid.as_rings(values)
    D = (np.roll(U, -1, axis=1) - np.roll(U, 1, axis=1)) / (2.0 * grid.h_theta)
    return grid.from_rings(0.0, D)


def center_gradient(grid, values):
    """Cartesian gradient at the center node from the first Fourier mode of
    the values on ring 1.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    values: array-like
        Nodal values

    Returns
    -------
    (float, float)
    """
    values = grid.check(values)
    ring = values[grid.ring_nodes(1)]
    theta = grid.angles()
    scale = 2.0 / (grid.n_theta * grid.h_r)
    gx = scale * np.dot(ring, np.cos(theta))
    gy = scale * np.dot(ring, np.sin(theta))
    return float(gx), float(gy)


def gradient(grid, values):
    """Gradient of a nodal field. Returns the radial component u_r and the
    angular component u_theta / r at ring nodes and the Cartesian gradient at
    the center node.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    values: array-like
        Nodal values

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
    """
    g_r = radial_derivative(grid, values)
    g_theta = angular_derivative(grid, values)
    g_theta[1:] /= grid.r[1:]
    g_r[0], g_theta[0] = center_gradient(grid, values)
    return g_r, g_theta


def gradient_magnitude(grid, values):
    """Euclidean norm of the discrete gradient at every node.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    values: array-like
        Nodal values

    Returns
    -------
    numpy.ndarray
    """
    g_r, g_theta = gradient(grid, values)
    return np.sqrt(g_r ** 2 + g_theta ** 2)


def perpendicular_gradient(grid, psi):
    """Perpendicular gradient (-psi_y, psi_x) of a stream function. In polar
    components the field is (-psi_theta / r, psi_r).

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    psi: array-like
        Nodal values of the stream function

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
    """
    radial = -angular_derivative(grid, psi)
    radial[1:] /= grid.r[1:]
    angular = radial_derivative(grid, psi)
    gx, gy = center_gradient(grid, psi)
    radial[0] = -gy
    angular[0] = gx
    return radial, angular


def divergence(grid, radial, angular):
    """Centered polar divergence (1/r)(r b_r)_r + (1/r)(b_theta)_theta at
    interior ring nodes. Values at the center and on the boundary are 0.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    radial: array-like
        Radial component of the vector field
    angular: array-like
        Angular component of the vector field

    Returns
    -------
    numpy.ndarray
    """
    n = grid.n_r
    h = grid.h_r
    flux = ring_matrix(grid, radial)
    radii = np.arange(n + 1) / float(n)
    flux = flux * radii[:, np.newaxis]
    B = grid.as_rings(angular)
    div = np.zeros((n, grid.n_theta))
    dr = (flux[2:, :] - flux[:-2, :]) / (2.0 * h)
    dtheta = (np.roll(B, -1, axis=1) - np.roll(B, 1, axis=1))
    dtheta = dtheta[:-1, :] / (2.0 * grid.h_theta)
    div[:-1, :] = (dr + dtheta) / radii[1:-1, np.newaxis]
    return grid.from_rings(0.0, div)

