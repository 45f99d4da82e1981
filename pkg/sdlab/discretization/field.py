# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Nodal scalar fields on a polar grid. Discrete fields hold the solutions u
and w, test functions, and sampled sources.
"""

import numpy as np


class DiscreteField(object):
    """Scalar values at the nodes of a polar grid."""
    def __init__(self, grid, values):
        """Initialize the grid and the nodal values. The values are copied into
        a float array.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid
        values: array-like
            One value per grid node

        Raises
        ------
        sdlab.error.GridMismatchError
        """
        self.grid = grid
        self.values = np.array(grid.check(values), dtype=float)

    def __add__(self, other):
        return DiscreteField(self.grid, self.values + _values(self, other))

    def __mul__(self, scalar):
        return DiscreteField(self.grid, float(scalar) * self.values)

    __rmul__ = __mul__

    def __neg__(self):
        return DiscreteField(self.grid, -self.values)

    def __sub__(self, other):
        return DiscreteField(self.grid, self.values - _values(self, other))

    @property
    def center_value(self):
        """Value at the center node.

        Returns
        -------
        float
        """
        return float(self.values[0])

    @staticmethod
    def from_function(grid, func):
        """Sample a function of the polar coordinates (r, theta) at the grid
        nodes.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid
        func: callable
            Vectorized function func(r, theta)

        Returns
        -------
        sdlab.discretization.field.DiscreteField
        """
        return DiscreteField(grid, func(grid.r, grid.theta))

    def rings(self):
        """Values on the rings as a matrix of shape (n_r, n_theta).

        Returns
        -------
        numpy.ndarray
        """
        return self.grid.as_rings(self.values)

    def sup_norm(self):
        """Maximum absolute nodal value.

        Returns
        -------
        float
        """
        return float(np.max(np.abs(self.values)))

    @staticmethod
    def zeros(grid):
        """Create the zero field on the given grid.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid

        Returns
        -------
        sdlab.discretization.field.DiscreteField
        """
        return DiscreteField(grid, np.zeros(grid.node_count))


def _values(field, other):
    """Get values of the other operand in an arithmetic expression."""
    if isinstance(other, DiscreteField):
        return field.grid.check(other.values)
    return field.grid.check(other)
