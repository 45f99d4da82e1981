# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Polar discretization of the unit disk. The disk grid has a single node at
the origin followed by n_r rings of n_theta nodes each. Nodes are ordered
center first, then ring-major and angle-minor, i.e., node (i, j) with ring
index i >= 1 and angle index j has the global index 1 + (i - 1) * n_theta + j.
The last ring (i = n_r) is the boundary of the disk.

The module also contains a one-dimensional radial grid that is used for radial
reductions of the problem.
"""

import numpy as np

from sdlab.error import GridMismatchError, InvalidGridError


"""Lower bounds for the grid resolution."""
MIN_RINGS = 4
MIN_ANGLES = 8


class Grid(object):
    """Polar tensor grid on the unit disk. Each ring node carries the
    quadrature weight r_i * h_r * h_theta (halved on the boundary ring). The
    center node carries the area of the disk with radius h_r / 2.
    """
    def __init__(self, n_r, n_theta):
        """Initialize the grid resolution and all nodal coordinate arrays.

        Parameters
        ----------
        n_r: int
            Number of radial intervals
        n_theta: int
            Number of angular intervals

        Raises
        ------
        sdlab.error.InvalidGridError
        """
        if not isinstance(n_r, (int, np.integer)) or n_r < MIN_RINGS:
            raise InvalidGridError(
                'number of radial intervals must be an integer >= {}'.format(
                    MIN_RINGS
                )
            )
        if not isinstance(n_theta, (int, np.integer)) or n_theta < MIN_ANGLES:
            raise InvalidGridError(
                'number of angular intervals must be an integer >= {}'.format(
                    MIN_ANGLES
                )
            )
        if n_theta % 2 != 0:
            raise InvalidGridError(
                'number of angular intervals must be even (got {})'.format(
                    n_theta
                )
            )
        self.n_r = int(n_r)
        self.n_theta = int(n_theta)
        self.h_r = 1.0 / self.n_r
        self.h_theta = 2.0 * np.pi / self.n_theta
        self.node_count = 1 + self.n_r * self.n_theta
        self.ring = np.concatenate([
            [0],
            np.repeat(np.arange(1, self.n_r + 1), self.n_theta)
        ])
        self.angle_index = np.concatenate([
            [0],
            np.tile(np.arange(self.n_theta), self.n_r)
        ])
        self.r = self.ring / float(self.n_r)
        self.theta = self.angle_index * self.h_theta
        self.x = self.r * np.cos(self.theta)
        self.y = self.r * np.sin(self.theta)
        self.boundary = self.ring == self.n_r
        self.interior = (self.ring > 0) & (self.ring < self.n_r)
        weights = self.r * self.h_r * self.h_theta
        weights[self.boundary] *= 0.5
        weights[0] = np.pi * (0.5 * self.h_r) ** 2
        self.quad_weights = weights

    def angles(self):
        """Get the angles of the nodes on each ring.

        Returns
        -------
        numpy.ndarray
        """
        return np.arange(self.n_theta) * self.h_theta

    def as_rings(self, values):
        """Reshape the non-center values of a nodal array into a matrix with
        one row per ring.

        Parameters
        ----------
        values: numpy.ndarray
            Nodal values

        Returns
        -------
        numpy.ndarray
        """
        values = self.check(values)
        return values[1:].reshape(self.n_r, self.n_theta)

    def check(self, values):
        """Ensure that the given array has one entry per grid node.

        Parameters
        ----------
        values: array-like
            Nodal values

        Returns
        -------
        numpy.ndarray

        Raises
        ------
        sdlab.error.GridMismatchError
        """
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or values.shape[0] != self.node_count:
            raise GridMismatchError(self.node_count, values.size)
        return values

    def from_rings(self, center, rings):
        """Inverse of as_rings. Creates a nodal array from a center value and a
        ring matrix.

        Parameters
        ----------
        center: float
            Value at the center node
        rings: numpy.ndarray
            Matrix of shape (n_r, n_theta)

        Returns
        -------
        numpy.ndarray
        """
        return np.concatenate([[center], np.asarray(rings).ravel()])

    def index(self, i, j):
        """Get global node index for ring index i and angle index j. Angle
        indices are taken modulo n_theta. Ring index 0 always refers to the
        center node.

        Parameters
        ----------
        i: int or numpy.ndarray
            Ring index
        j: int or numpy.ndarray
            Angle index

        Returns
        -------
        int or numpy.ndarray
        """
        i = np.asarray(i)
        j = np.asarray(j) % self.n_theta
        idx = np.where(i == 0, 0, 1 + (i - 1) * self.n_theta + j)
        if idx.ndim == 0:
            return int(idx)
        return idx

    def ring_nodes(self, i):
        """Get the global indices of all nodes on ring i.

        Parameters
        ----------
        i: int
            Ring index

        Returns
        -------
        numpy.ndarray
        """
        if i == 0:
            return np.array([0])
        start = 1 + (i - 1) * self.n_theta
        return np.arange(start, start + self.n_theta)

    def shape(self):
        """Short tuple representation of the grid resolution.

        Returns
        -------
        (int, int)
        """
        return (self.n_r, self.n_theta)


class RadialGrid(object):
    """Uniform mesh of the unit interval for the radial reduction of the
    problem.
    """
    def __init__(self, n):
        """Initialize the mesh nodes r_i = i * h.

        Parameters
        ----------
        n: int
            Number of intervals

        Raises
        ------
        sdlab.error.InvalidGridError
        """
        if not isinstance(n, (int, np.integer)) or n < 2:
            raise InvalidGridError('radial grid requires at least 2 intervals')
        self.n = int(n)
        self.h = 1.0 / self.n
        self.r = np.arange(self.n + 1) / float(self.n)


def build_disk_grid(n_r, n_theta):
    """Create the polar grid of the unit disk.

    Parameters
    ----------
    n_r: int
        Number of radial intervals (>= 4)
    n_theta: int
        Number of angular intervals (>= 8 and even)

    Returns
    -------
    sdlab.discretization.grid.Grid

    Raises
    ------
    sdlab.error.InvalidGridError
    """
    return Grid(n_r=n_r, n_theta=n_theta)


def build_radial_grid(n):
    """Create a uniform radial mesh with n intervals.

    Parameters
    ----------
    n: int
        Number of intervals

    Returns
    -------
    sdlab.discretization.grid.RadialGrid
    """
    return RadialGrid(n=n)


def integrate(grid, field):
    """Quadrature of a nodal field over the disk.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    field: sdlab.discretization.field.DiscreteField or array-like
        Nodal values

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.GridMismatchError
    """
    values = getattr(field, 'values', field)
    values = grid.check(values)
    return float(np.dot(grid.quad_weights, values))
