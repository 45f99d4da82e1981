# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Mollification of divergence-free drift fields. The stream function psi of
the field is convolved with the normalized bump

    rho(y) = C exp(-1 / (1 - |y|^2 / eta^2)),  |y| < eta,

and the mollified field is the discrete perpendicular gradient of the
convolved stream function. Since centered differences in r and theta commute,
the discrete divergence of the result vanishes at interior nodes up to
round-off.

The logarithmic stream function of the swirl field is averaged exactly: for a
radial density the mean of ln|x - y| over the circle |y| = s equals
ln max(|x|, s), which reduces the convolution to a one-dimensional integral.
Smooth stream functions are convolved by a tensor quadrature of the bump
(Gauss-Legendre in the radius, uniform in the angle).
"""

import logging
import numpy as np

from scipy.integrate import quad

from sdlab.drift.base import DriftSpec, MollifiedField, VectorFieldSample
from sdlab.error import InvalidDriftError

import sdlab.discretization.operators as op


logger = logging.getLogger(__name__)


"""Quadrature resolution for the convolution of smooth stream functions."""
RADIAL_NODES = 16
ANGULAR_NODES = 24


def bump_density(s, eta):
    """Unnormalized bump profile exp(-1 / (1 - s^2 / eta^2)) for s < eta and 0
    otherwise.

    Parameters
    ----------
    s: float or numpy.ndarray
        Distance from the bump center
    eta: float
        Bump radius

    Returns
    -------
    float or numpy.ndarray
    """
    t2 = (np.asarray(s, dtype=float) / eta) ** 2
    inside = t2 < 1.0
    with np.errstate(over='ignore', under='ignore'):
        return np.where(inside, np.exp(-1.0 / np.where(inside, 1.0 - t2, 1.0)), 0.0)


def bump_mass(eta):
    """Integral of the unnormalized bump over the plane.

    Parameters
    ----------
    eta: float
        Bump radius

    Returns
    -------
    float
    """
    value, _ = quad(lambda s: bump_density(s, eta) * 2.0 * np.pi * s, 0.0, eta)
    return value


def mollified_log(radii, eta):
    """Convolution of ln|x| with the normalized bump of radius eta, evaluated
    at the given distances from the origin. The result equals ln r for
    r >= eta.

    Parameters
    ----------
    radii: numpy.ndarray
        Distances from the origin
    eta: float
        Bump radius

    Returns
    -------
    numpy.ndarray
    """
    mass = bump_mass(eta)

    def density(s):
        return bump_density(s, eta) * 2.0 * np.pi * s / mass

    radii = np.asarray(radii, dtype=float)
    values = np.empty_like(radii)
    for k, r in enumerate(radii):
        if r >= eta:
            values[k] = np.log(r)
            continue
        outer, _ = quad(lambda s: np.log(s) * density(s), r, eta, limit=200)
        if r > 0:
            inner, _ = quad(density, 0.0, r, limit=200)
            values[k] = np.log(r) * inner + outer
        else:
            values[k] = outer
    return values


def convolution_nodes(eta):
    """Quadrature nodes and weights for the convolution with the normalized
    bump. The weights sum to 1.

    Parameters
    ----------
    eta: float
        Bump radius

    Returns
    -------
    (numpy.ndarray, numpy.ndarray, numpy.ndarray)
    """
    t, w = np.polynomial.legendre.leggauss(RADIAL_NODES)
    s = 0.5 * eta * (t + 1.0)
    ws = 0.5 * eta * w * bump_density(s, eta) * s
    phi = 2.0 * np.pi * (np.arange(ANGULAR_NODES) + 0.5) / ANGULAR_NODES
    S, PHI = np.meshgrid(s, phi, indexing='ij')
    W = np.repeat(ws[:, np.newaxis], ANGULAR_NODES, axis=1)
    W = W / np.sum(W)
    return (S * np.cos(PHI)).ravel(), (S * np.sin(PHI)).ravel(), W.ravel()


def mollified_stream(part, eta, grid):
    """Nodal values of the convolution of the stream function of a
    divergence-free part with the bump of radius eta.

    Parameters
    ----------
    part: sdlab.drift.base.DivergenceFreePart
        Swirl or stream part of a drift
    eta: float
        Bump radius
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    numpy.ndarray
    """
    if part.is_swirl():
        radii = np.arange(grid.n_r + 1) / float(grid.n_r)
        values = part.beta * mollified_log(radii, eta)
        return np.concatenate([[values[0]], np.repeat(values[1:], grid.n_theta)])
    yx, yy, w = convolution_nodes(eta)
    psi = np.empty(grid.node_count)
    # Process nodes in blocks to bound the size of the evaluation matrix
    block = 4096
    for start in range(0, grid.node_count, block):
        stop = min(start + block, grid.node_count)
        X = grid.x[start:stop, np.newaxis] - yx[np.newaxis, :]
        Y = grid.y[start:stop, np.newaxis] - yy[np.newaxis, :]
        psi[start:stop] = np.dot(part.stream_function(X, Y), w)
    return psi


def mollify_divfree(spec, eta, grid):
    """Mollify the divergence-free part of a drift with alpha = 0. Returns the
    discrete perpendicular gradient of the mollified stream function.

    Parameters
    ----------
    spec: sdlab.drift.base.DriftSpec
        Drift specification with alpha = 0
    eta: float
        Mollification radius
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    sdlab.drift.base.VectorFieldSample

    Raises
    ------
    sdlab.error.InvalidDriftError
    """
    if not eta > 0:
        raise InvalidDriftError('mollification radius must be positive')
    if spec.alpha != 0:
        raise InvalidDriftError(
            'mollification applies to the divergence-free part only (alpha = 0)'
        )
    part = spec.divfree
    if part.is_none():
        zeros = np.zeros(grid.node_count)
        return VectorFieldSample(grid, zeros, zeros)
    if part.is_mollified():
        raise InvalidDriftError('drift is already mollified')
    logger.debug('mollify %s field with eta=%g', part.type_id, eta)
    psi = mollified_stream(part, eta, grid)
    radial, angular = op.perpendicular_gradient(grid, psi)
    return VectorFieldSample(grid, radial, angular)


def mollified_drift(spec, eta):
    """Drift specification whose divergence-free part is the mollification of
    the divergence-free part of the given drift. The singular part and the
    regularization parameter are kept.

    Parameters
    ----------
    spec: sdlab.drift.base.DriftSpec
        Drift specification
    eta: float
        Mollification radius

    Returns
    -------
    sdlab.drift.base.DriftSpec
    """
    if spec.divfree.is_none():
        return spec
    base = DriftSpec(alpha=0.0, divfree=spec.divfree)
    return DriftSpec(
        alpha=spec.alpha,
        epsilon=spec.epsilon,
        divfree=MollifiedField(base=base, eta=eta)
    )
