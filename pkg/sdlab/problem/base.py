# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Problem specifications and assembled linear systems for the Dirichlet
problem

    -Laplace(u) + b_alpha . grad(u) = g   in the unit disk,
                                  u = 0   on the boundary,

where the right-hand side is either a scalar source g or the divergence
g = -div f of a vector source f. Pinned problems add the condition u(0) = 0.
"""

import numpy as np

from sdlab.drift.base import DriftSpec
from sdlab.error import InvalidProblemError
from sdlab.profile.base import Profile

import sdlab.profile.declaration as pd
import sdlab.profile.util as putil


"""Right-hand side modes."""
RHS_SCALAR = 'scalar_g'
RHS_VECTOR = 'vector_f'

RHS_MODES = [RHS_SCALAR, RHS_VECTOR]


"""Discretization schemes for the drift term."""
SCHEME_CENTERED = 'centered'
SCHEME_UPWIND = 'upwind'

SCHEMES = [SCHEME_CENTERED, SCHEME_UPWIND]


class ProblemSpec(object):
    """Specification of a Dirichlet problem with singular drift."""
    def __init__(
        self, drift, source=None, rhs_mode=RHS_SCALAR, q=4.0, pinned=False,
        scheme=SCHEME_CENTERED, require_unique=False
    ):
        """Initialize the problem components.

        Parameters
        ----------
        drift: sdlab.drift.base.DriftSpec
            Drift specification
        source: sdlab.profile.base.Profile, dict, or string, optional
            Source g (scalar mode) or f (vector mode). The default is the zero
            source.
        rhs_mode: string, optional
            Right-hand side mode (scalar_g or vector_f)
        q: float, optional
            Integrability exponent of the vector source (q > 2)
        pinned: bool, optional
            Impose u(0) = 0
        scheme: string, optional
            Discretization scheme for the drift term
        require_unique: bool, optional
            Reject specifications that have a non-trivial kernel

        Raises
        ------
        sdlab.error.InvalidProblemError
        sdlab.error.InvalidProfileError
        """
        if not isinstance(drift, DriftSpec):
            raise InvalidProblemError('invalid drift specification')
        if not rhs_mode in RHS_MODES:
            raise InvalidProblemError('unknown rhs mode \'{}\''.format(rhs_mode))
        if not q > 2:
            raise InvalidProblemError('integrability exponent q must exceed 2')
        if require_unique and drift.alpha < 0 and not pinned:
            raise InvalidProblemError(
                'unique solutions for alpha < 0 require the pinning u(0) = 0'
            )
        if source is None:
            source = {pd.LABEL_ID: pd.CONSTANT, pd.LABEL_VALUE: 0.0}
        if isinstance(source, (dict, str)):
            if rhs_mode == RHS_VECTOR:
                kinds = pd.VECTOR_PROFILES
            else:
                kinds = pd.SOLUTION_PROFILES + pd.SOURCE_PROFILES
            source = putil.create_profile(source, kinds=kinds)
        if rhs_mode == RHS_SCALAR and not isinstance(source, Profile):
            raise InvalidProblemError('scalar mode requires a scalar source')
        if rhs_mode == RHS_VECTOR and isinstance(source, Profile):
            raise InvalidProblemError('vector mode requires a vector source')
        self.drift = drift
        self.source = source
        self.rhs_mode = rhs_mode
        self.q = float(q)
        self.pinned = pinned
        self.scheme = scheme
        self.require_unique = require_unique

    def is_vector_mode(self):
        """Returns True if the right-hand side is given as -div f.

        Returns
        -------
        bool
        """
        return self.rhs_mode == RHS_VECTOR

    def replace(self, **kwargs):
        """Copy of the specification with the given components replaced.

        Parameters
        ----------
        kwargs: dict
            Replaced constructor arguments

        Returns
        -------
        sdlab.problem.base.ProblemSpec
        """
        args = {
            'drift': self.drift,
            'source': self.source,
            'rhs_mode': self.rhs_mode,
            'q': self.q,
            'pinned': self.pinned,
            'scheme': self.scheme,
            'require_unique': self.require_unique
        }
        args.update(kwargs)
        return ProblemSpec(**args)

    def to_dict(self):
        """Get dictionary serialization of the problem (used for logging and
        run records).

        Returns
        -------
        dict
        """
        return {
            'drift': self.drift.to_dict(),
            'source': self.source.to_dict(),
            'rhsMode': self.rhs_mode,
            'q': self.q,
            'pinned': self.pinned,
            'scheme': self.scheme
        }


class LinearSystem(object):
    """Sparse linear system for the nodal values of a discretized problem. The
    matrix is kept in compressed sparse row format.
    """
    def __init__(self, grid, matrix, rhs, pinned, scheme):
        """Initialize the system components.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid
        matrix: scipy.sparse.csr_matrix
            System matrix
        rhs: numpy.ndarray
            Right-hand side
        pinned: bool
            Flag indicating whether the center row encodes u(0) = 0
        scheme: string
            Discretization scheme
        """
        self.grid = grid
        self.matrix = matrix.tocsr()
        self.rhs = np.asarray(rhs, dtype=float)
        self.pinned = pinned
        self.scheme = scheme

    @property
    def col_indices(self):
        """Column indices of the compressed row format."""
        return self.matrix.indices

    @property
    def row_offsets(self):
        """Row offsets of the compressed row format."""
        return self.matrix.indptr

    @property
    def values(self):
        """Non-zero values of the compressed row format."""
        return self.matrix.data

    def diagonal(self):
        """Diagonal of the system matrix.

        Returns
        -------
        numpy.ndarray
        """
        return self.matrix.diagonal()

    def interior_residual(self, u, r_min=None):
        """Row-scaled residual (b - A u)_k / A_kk in the quadrature L2 norm
        over the interior nodes with radius at least r_min. The default for
        r_min is 2 h_r.

        Parameters
        ----------
        u: sdlab.discretization.field.DiscreteField or numpy.ndarray
            Nodal values
        r_min: float, optional
            Smallest radius of nodes in the norm

        Returns
        -------
        float
        """
        grid = self.grid
        if r_min is None:
            r_min = 2.0 * grid.h_r
        res = self.residual(u) / self.diagonal()
        mask = grid.interior & (grid.r >= r_min - 1e-12)
        return float(np.sqrt(np.dot(grid.quad_weights[mask], res[mask] ** 2)))

    def relative_residual(self, u):
        """Relative residual ||b - A u|| / ||b|| in the Euclidean norm. For a
        zero right-hand side the absolute residual is returned.

        Parameters
        ----------
        u: sdlab.discretization.field.DiscreteField or numpy.ndarray
            Nodal values

        Returns
        -------
        float
        """
        res = np.linalg.norm(self.residual(u))
        norm_b = np.linalg.norm(self.rhs)
        if norm_b == 0:
            return float(res)
        return float(res / norm_b)

    def residual(self, u):
        """Residual b - A u.

        Parameters
        ----------
        u: sdlab.discretization.field.DiscreteField or numpy.ndarray
            Nodal values

        Returns
        -------
        numpy.ndarray
        """
        values = self.grid.check(getattr(u, 'values', u))
        return self.rhs - self.matrix.dot(values)

    def size(self):
        """Number of unknowns.

        Returns
        -------
        int
        """
        return self.matrix.shape[0]

    def with_rhs(self, rhs):
        """Copy of the system with a different right-hand side.

        Parameters
        ----------
        rhs: numpy.ndarray
            Right-hand side

        Returns
        -------
        sdlab.problem.base.LinearSystem
        """
        return LinearSystem(
            grid=self.grid,
            matrix=self.matrix,
            rhs=rhs,
            pinned=self.pinned,
            scheme=self.scheme
        )
