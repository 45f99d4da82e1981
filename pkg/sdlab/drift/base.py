# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Drift fields of the form b_alpha = b - alpha x / (|x|^2 + epsilon^2). The
divergence-free part b is one of four variants:

- none: b = 0,
- swirl: b = beta x^perp / |x|^2 (stream function beta ln r),
- stream: perpendicular gradient of a stream function from the profile catalog,
- mollified: the stream function of a swirl or stream field convolved with a
  smooth bump of radius eta.

Sampled vector fields store polar components (radial, angular) at ring nodes
and Cartesian components at the center node.
"""

import numpy as np

from sdlab.discretization.field import DiscreteField
from sdlab.error import InvalidDriftError
from sdlab.util.core import validate_doc

import sdlab.discretization.operators as op
import sdlab.profile.declaration as pd
import sdlab.profile.util as putil


"""Type identifier for divergence-free parts."""
DIVFREE_MOLLIFIED = 'mollified'
DIVFREE_NONE = 'none'
DIVFREE_STREAM = 'stream'
DIVFREE_SWIRL = 'swirl'


"""Labels for serialization."""
LABEL_ALPHA = 'alpha'
LABEL_BASE = 'base'
LABEL_BETA = 'beta'
LABEL_DIVFREE = 'divfree'
LABEL_EPSILON = 'epsilon'
LABEL_ETA = 'eta'
LABEL_PSI = 'psi'
LABEL_TYPE = 'type'


# ------------------------------------------------------------------------------
# Divergence-free parts
# ------------------------------------------------------------------------------

class DivergenceFreePart(object):
    """Base class for the divergence-free part b of a drift field."""
    def __init__(self, type_id):
        """Initialize the type identifier.

        Parameters
        ----------
        type_id: string
            Type identifier
        """
        self.type_id = type_id

    @staticmethod
    def from_dict(doc):
        """Get instance of a divergence-free part from a dictionary
        serialization as created by the to_dict() method of the sub-types.

        Parameters
        ----------
        doc: dict
            Dictionary serialization

        Returns
        -------
        sdlab.drift.base.DivergenceFreePart

        Raises
        ------
        sdlab.error.InvalidDriftError
        """
        try:
            type_id = doc[LABEL_TYPE]
            if type_id == DIVFREE_NONE:
                validate_doc(doc, [LABEL_TYPE])
                return NoDivergenceFree()
            elif type_id == DIVFREE_SWIRL:
                validate_doc(doc, [LABEL_TYPE, LABEL_BETA])
                return SwirlField(beta=doc[LABEL_BETA])
            elif type_id == DIVFREE_STREAM:
                validate_doc(doc, [LABEL_TYPE, LABEL_PSI])
                return StreamField(psi=doc[LABEL_PSI])
            elif type_id == DIVFREE_MOLLIFIED:
                validate_doc(doc, [LABEL_TYPE, LABEL_BASE, LABEL_ETA])
                return MollifiedField(
                    base=DriftSpec.from_dict(doc[LABEL_BASE]),
                    eta=doc[LABEL_ETA]
                )
        except (KeyError, ValueError) as ex:
            raise InvalidDriftError(str(ex))
        raise InvalidDriftError('invalid drift type \'{}\''.format(type_id))

    def is_mollified(self):
        """Returns True if the part is a mollified field.

        Returns
        -------
        bool
        """
        return self.type_id == DIVFREE_MOLLIFIED

    def is_none(self):
        """Returns True if the part is the zero field.

        Returns
        -------
        bool
        """
        return self.type_id == DIVFREE_NONE

    def is_stream(self):
        """Returns True if the part is generated by a catalog stream function.

        Returns
        -------
        bool
        """
        return self.type_id == DIVFREE_STREAM

    def is_swirl(self):
        """Returns True if the part is the swirl field.

        Returns
        -------
        bool
        """
        return self.type_id == DIVFREE_SWIRL

    def sample(self, grid):
        """Sample the field at the grid nodes.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid

        Returns
        -------
        (numpy.ndarray, numpy.ndarray)
        """
        raise NotImplementedError()

    def to_dict(self):
        """Get dictionary serialization.

        Returns
        -------
        dict
        """
        return {LABEL_TYPE: self.type_id}


class NoDivergenceFree(DivergenceFreePart):
    """The zero field."""
    def __init__(self):
        super(NoDivergenceFree, self).__init__(type_id=DIVFREE_NONE)

    def sample(self, grid):
        return np.zeros(grid.node_count), np.zeros(grid.node_count)


class SwirlField(DivergenceFreePart):
    """Swirl field beta x^perp / |x|^2. The field is purely angular with
    magnitude beta / r. The value at the center node is set to 0.
    """
    def __init__(self, beta=1.0):
        """Initialize the swirl strength.

        Parameters
        ----------
        beta: float, optional
            Swirl strength
        """
        super(SwirlField, self).__init__(type_id=DIVFREE_SWIRL)
        self.beta = float(beta)

    def sample(self, grid):
        angular = np.zeros(grid.node_count)
        angular[1:] = self.beta / grid.r[1:]
        return np.zeros(grid.node_count), angular

    def stream_function(self, x, y):
        """Stream function beta ln |x|.

        Parameters
        ----------
        x: numpy.ndarray
            First coordinate
        y: numpy.ndarray
            Second coordinate

        Returns
        -------
        numpy.ndarray
        """
        with np.errstate(divide='ignore'):
            return self.beta * np.log(np.hypot(x, y))

    def to_dict(self):
        return {LABEL_TYPE: self.type_id, LABEL_BETA: self.beta}


class StreamField(DivergenceFreePart):
    """Perpendicular gradient of a stream function from the profile catalog."""
    def __init__(self, psi):
        """Initialize the stream function.

        Parameters
        ----------
        psi: dict or string
            Declaration of a stream function profile

        Raises
        ------
        sdlab.error.InvalidProfileError
        """
        super(StreamField, self).__init__(type_id=DIVFREE_STREAM)
        self.profile = putil.create_profile(psi, kinds=pd.STREAM_PROFILES)

    def sample(self, grid):
        radial = np.zeros(grid.node_count)
        angular = np.zeros(grid.node_count)
        radial[1:], angular[1:] = self.profile.velocity(
            grid.r[1:],
            grid.theta[1:]
        )
        return radial, angular

    def stream_function(self, x, y):
        """Evaluate the stream function at Cartesian coordinates."""
        return self.profile.cartesian(x, y)

    def to_dict(self):
        return {LABEL_TYPE: self.type_id, LABEL_PSI: self.profile.to_dict()}


class MollifiedField(DivergenceFreePart):
    """Divergence-free field whose stream function is the stream function of a
    swirl or stream field convolved with a smooth bump of radius eta.
    """
    def __init__(self, base, eta):
        """Initialize the mollified drift and the mollification radius.

        Parameters
        ----------
        base: sdlab.drift.base.DriftSpec
            Drift with alpha = 0 and a swirl or stream part
        eta: float
            Mollification radius

        Raises
        ------
        sdlab.error.InvalidDriftError
        """
        super(MollifiedField, self).__init__(type_id=DIVFREE_MOLLIFIED)
        if base.alpha != 0:
            raise InvalidDriftError('only divergence-free drifts are mollified')
        if not (base.divfree.is_swirl() or base.divfree.is_stream()):
            raise InvalidDriftError(
                'cannot mollify drift of type \'{}\''.format(
                    base.divfree.type_id
                )
            )
        if not eta > 0:
            raise InvalidDriftError('mollification radius must be positive')
        self.base = base
        self.eta = float(eta)

    def sample(self, grid):
        # Imported here since the mollifier depends on this module
        from sdlab.drift.mollify import mollify_divfree
        field = mollify_divfree(self.base, self.eta, grid)
        return field.radial.copy(), field.angular.copy()

    def to_dict(self):
        return {
            LABEL_TYPE: self.type_id,
            LABEL_BASE: self.base.to_dict(),
            LABEL_ETA: self.eta
        }


# ------------------------------------------------------------------------------
# Drift specification
# ------------------------------------------------------------------------------

class DriftSpec(object):
    """Specification of the drift b_alpha = b - alpha x / (|x|^2 + epsilon^2)
    with swirl coefficient alpha, regularization parameter epsilon, and
    divergence-free part b.
    """
    def __init__(self, alpha, epsilon=0.0, divfree=None):
        """Initialize the drift parameters.

        Parameters
        ----------
        alpha: float
            Coefficient of the singular drift
        epsilon: float, optional
            Regularization parameter (non-negative)
        divfree: sdlab.drift.base.DivergenceFreePart, optional
            Divergence-free part. The default is the zero field.

        Raises
        ------
        sdlab.error.InvalidDriftError
        """
        if not np.isfinite(alpha):
            raise InvalidDriftError('alpha must be finite')
        if not np.isfinite(epsilon) or epsilon < 0:
            raise InvalidDriftError('epsilon must be a non-negative number')
        self.alpha = float(alpha)
        self.epsilon = float(epsilon)
        self.divfree = divfree if not divfree is None else NoDivergenceFree()

    @staticmethod
    def from_dict(doc):
        """Get drift specification from its dictionary serialization.

        Parameters
        ----------
        doc: dict
            Dictionary serialization as created by to_dict()

        Returns
        -------
        sdlab.drift.base.DriftSpec

        Raises
        ------
        sdlab.error.InvalidDriftError
        """
        try:
            validate_doc(doc, [LABEL_ALPHA], [LABEL_EPSILON, LABEL_DIVFREE])
        except ValueError as ex:
            raise InvalidDriftError(str(ex))
        divfree = None
        if LABEL_DIVFREE in doc:
            divfree = DivergenceFreePart.from_dict(doc[LABEL_DIVFREE])
        return DriftSpec(
            alpha=doc[LABEL_ALPHA],
            epsilon=doc.get(LABEL_EPSILON, 0.0),
            divfree=divfree
        )

    def to_dict(self):
        """Get dictionary serialization of the drift specification.

        Returns
        -------
        dict
        """
        return {
            LABEL_ALPHA: self.alpha,
            LABEL_EPSILON: self.epsilon,
            LABEL_DIVFREE: self.divfree.to_dict()
        }

    def with_alpha(self, alpha):
        """Copy of the specification with a modified swirl coefficient.

        Parameters
        ----------
        alpha: float
            Coefficient of the singular drift

        Returns
        -------
        sdlab.drift.base.DriftSpec
        """
        return DriftSpec(alpha=alpha, epsilon=self.epsilon, divfree=self.divfree)

    def with_epsilon(self, epsilon):
        """Copy of the specification with a modified regularization parameter.

        Parameters
        ----------
        epsilon: float
            Regularization parameter

        Returns
        -------
        sdlab.drift.base.DriftSpec
        """
        return DriftSpec(alpha=self.alpha, epsilon=epsilon, divfree=self.divfree)

    def without_divfree(self):
        """Copy of the specification with the divergence-free part removed.

        Returns
        -------
        sdlab.drift.base.DriftSpec
        """
        return DriftSpec(alpha=self.alpha, epsilon=self.epsilon)


class VectorFieldSample(object):
    """Nodal values of a vector field in polar components. The center node
    holds the Cartesian components.
    """
    def __init__(self, grid, radial, angular):
        """Initialize the grid and both components.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid
        radial: array-like
            Radial components
        angular: array-like
            Angular components

        Raises
        ------
        sdlab.error.GridMismatchError
        """
        self.grid = grid
        self.radial = np.array(grid.check(radial), dtype=float)
        self.angular = np.array(grid.check(angular), dtype=float)

    def __mul__(self, scalar):
        return VectorFieldSample(
            self.grid,
            float(scalar) * self.radial,
            float(scalar) * self.angular
        )

    __rmul__ = __mul__

    def magnitude(self):
        """Euclidean norm of the field at every node.

        Returns
        -------
        numpy.ndarray
        """
        return np.hypot(self.radial, self.angular)


# ------------------------------------------------------------------------------
# Evaluation
# ------------------------------------------------------------------------------

def eval_drift(spec, grid, radial_exact=False):
    """Sample the drift b - alpha x / (|x|^2 + epsilon^2) at the grid nodes.
    The singular part is evaluated with epsilon = 0 only if the caller
    requests the radial-exact mode; its value at the center node is 0.

    Parameters
    ----------
    spec: sdlab.drift.base.DriftSpec
        Drift specification
    grid: sdlab.discretization.grid.Grid
        Polar grid
    radial_exact: bool, optional
        Accept epsilon = 0 for alpha != 0

    Returns
    -------
    sdlab.drift.base.VectorFieldSample

    Raises
    ------
    sdlab.error.InvalidDriftError
    """
    if spec.epsilon == 0 and spec.alpha != 0 and not radial_exact:
        raise InvalidDriftError(
            'singular drift with epsilon = 0 is only defined in radial-exact mode'
        )
    radial, angular = spec.divfree.sample(grid)
    if spec.alpha != 0:
        r = grid.r[1:]
        radial[1:] -= spec.alpha * r / (r ** 2 + spec.epsilon ** 2)
    return VectorFieldSample(grid, radial, angular)


def discrete_divergence(field, grid):
    """Centered polar divergence of a sampled vector field at interior nodes.
    Values at the center and at the boundary are 0.

    Parameters
    ----------
    field: sdlab.drift.base.VectorFieldSample
        Sampled vector field
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    sdlab.discretization.field.DiscreteField
    """
    return DiscreteField(grid, op.divergence(grid, field.radial, field.angular))
