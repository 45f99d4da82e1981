# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Analytic profiles. A profile is a closed-form function on the unit disk
that is evaluated at polar coordinates (r, theta). Profiles serve as exact
solutions (with closed-form radial derivatives), as scalar sources g, as vector
sources f, and as stream functions of divergence-free drift fields.

Each profile records its behavior at the origin as an exponent. A profile that
behaves like r^k near the origin has origin order k. An origin order of 0 means
that the profile is finite and (in general) non-zero at the origin, negative
values indicate a singularity, and infinity indicates that the profile vanishes
in a neighborhood of the origin.
"""

import numpy as np

from scipy.integrate import quad

from sdlab.error import InvalidProfileError

import sdlab.profile.declaration as pd


"""Number of samples for angular averages of non-radial profiles."""
ANGULAR_SAMPLES = 64


class Profile(object):
    """Base class for scalar analytic profiles."""
    def __init__(self, doc, is_radial=True, origin_order=0.0):
        """Initialize the declaration and the structural properties of the
        profile.

        Parameters
        ----------
        doc: dict
            Profile declaration
        is_radial: bool, optional
            Flag indicating whether the profile only depends on r
        origin_order: float, optional
            Exponent of the leading order behavior at the origin
        """
        self.doc = doc
        self.identifier = doc.get(pd.LABEL_ID)
        self.is_radial = is_radial
        self.origin_order = origin_order

    def __call__(self, r, theta=0.0):
        return self.evaluate(r, theta)

    def angular_mean(self, r):
        """Mean value of the profile over the circle with radius r.

        Parameters
        ----------
        r: float
            Radius

        Returns
        -------
        float
        """
        if self.is_radial:
            return float(self.evaluate(r, 0.0))
        theta = 2.0 * np.pi * np.arange(ANGULAR_SAMPLES) / ANGULAR_SAMPLES
        return float(np.mean(self.evaluate(r, theta)))

    def cell_average(self, rho):
        """Mean value of the profile over the disk with radius rho around the
        origin. The profile needs to be integrable at the origin.

        Parameters
        ----------
        rho: float
            Radius of the disk

        Returns
        -------
        float

        Raises
        ------
        sdlab.error.InvalidProfileError
        """
        if not self.is_integrable():
            raise InvalidProfileError(
                'profile \'{}\' is not integrable at the origin'.format(
                    self.identifier
                )
            )
        value, _ = quad(lambda s: self.angular_mean(s) * s, 0.0, rho, limit=200)
        return 2.0 * value / rho ** 2

    def center_value(self):
        """Value of the profile at the origin.

        Returns
        -------
        float

        Raises
        ------
        sdlab.error.InvalidProfileError
        """
        if self.origin_order < 0:
            raise InvalidProfileError(
                'profile \'{}\' is singular at the origin'.format(
                    self.identifier
                )
            )
        return float(self.evaluate(0.0, 0.0))

    def evaluate(self, r, theta):
        """Evaluate the profile at the given polar coordinates. Inputs are
        broadcast against each other.

        Parameters
        ----------
        r: float or numpy.ndarray
            Radius
        theta: float or numpy.ndarray
            Angle

        Returns
        -------
        float or numpy.ndarray
        """
        raise NotImplementedError()

    def is_integrable(self):
        """Test whether the profile is integrable near the origin (in two
        dimensions).

        Returns
        -------
        bool
        """
        return self.origin_order + 2.0 > 0

    def sample(self, grid):
        """Nodal values of the profile on the given grid.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid

        Returns
        -------
        numpy.ndarray

        Raises
        ------
        sdlab.error.InvalidProfileError
        """
        values = np.empty(grid.node_count)
        values[0] = self.center_value()
        values[1:] = self.evaluate(grid.r[1:], grid.theta[1:])
        return values

    def to_dict(self):
        """Get dictionary serialization of the profile declaration.

        Returns
        -------
        dict
        """
        return dict(self.doc)


class RadialProfile(Profile):
    """Radial profile v(r). Exact solutions implement the first and second
    derivative in closed form.
    """
    def __init__(self, doc, origin_order=0.0, leading_power=2.0):
        """Initialize the profile declaration.

        Parameters
        ----------
        doc: dict
            Profile declaration
        origin_order: float, optional
            Exponent of the leading order behavior at the origin
        leading_power: float, optional
            Smallest positive power of r in the expansion v(r) = v(0) + c r^k
            near the origin
        """
        super(RadialProfile, self).__init__(
            doc=doc,
            is_radial=True,
            origin_order=origin_order
        )
        self.leading_power = leading_power

    def d1(self, r):
        """First derivative v'(r)."""
        raise NotImplementedError()

    def d2(self, r):
        """Second derivative v''(r)."""
        raise NotImplementedError()

    def energy_norm(self):
        """Exact energy norm (|grad v|^2 + v^2 integrated over the disk)^(1/2).

        Returns
        -------
        float
        """
        def integrand(s):
            return (self.d1(s) ** 2 + self.value(s) ** 2) * 2.0 * np.pi * s

        value, _ = quad(integrand, 0.0, 1.0, limit=200)
        return float(np.sqrt(value))

    def evaluate(self, r, theta):
        r, _ = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        return self.value(r)

    def value(self, r):
        """Profile value v(r)."""
        raise NotImplementedError()


# ------------------------------------------------------------------------------
# Exact solutions
# ------------------------------------------------------------------------------

class OneMinusR2(RadialProfile):
    """Profile A (1 - r^2)."""
    def __init__(self, doc):
        super(OneMinusR2, self).__init__(doc=doc)
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)

    def d1(self, r):
        return -2.0 * self.amplitude * np.asarray(r)

    def d2(self, r):
        return -2.0 * self.amplitude * np.ones_like(np.asarray(r, dtype=float))

    def value(self, r):
        return self.amplitude * (1.0 - np.asarray(r) ** 2)


class OneMinusR2Squared(RadialProfile):
    """Profile A (1 - r^2)^2."""
    def __init__(self, doc):
        super(OneMinusR2Squared, self).__init__(doc=doc)
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)

    def d1(self, r):
        r = np.asarray(r)
        return -4.0 * self.amplitude * r * (1.0 - r ** 2)

    def d2(self, r):
        r = np.asarray(r)
        return self.amplitude * (-4.0 + 12.0 * r ** 2)

    def value(self, r):
        return self.amplitude * (1.0 - np.asarray(r) ** 2) ** 2


class R2OneMinusR(RadialProfile):
    """Profile A r^2 (1 - r). Vanishes at the origin."""
    def __init__(self, doc):
        super(R2OneMinusR, self).__init__(doc=doc, origin_order=2.0)
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)

    def d1(self, r):
        r = np.asarray(r)
        return self.amplitude * (2.0 * r - 3.0 * r ** 2)

    def d2(self, r):
        r = np.asarray(r)
        return self.amplitude * (2.0 - 6.0 * r)

    def value(self, r):
        r = np.asarray(r)
        return self.amplitude * r ** 2 * (1.0 - r)


class KernelWeighted(RadialProfile):
    """Profile A r^m (1 - r) with m = 1 + a for exponent a >= 0. For a = |alpha|
    the profile behaves like the kernel r^|alpha| multiplied by r near the
    origin.
    """
    def __init__(self, doc):
        self.exponent = doc.get(pd.LABEL_EXPONENT, 0.5)
        m = 1.0 + self.exponent
        super(KernelWeighted, self).__init__(
            doc=doc,
            origin_order=m,
            leading_power=m
        )
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)
        self.m = m

    def d1(self, r):
        r = np.asarray(r, dtype=float)
        m = self.m
        return self.amplitude * (m * r ** (m - 1) - (m + 1) * r ** m)

    def d2(self, r):
        r = np.asarray(r, dtype=float)
        m = self.m
        with np.errstate(divide='ignore'):
            return self.amplitude * (
                m * (m - 1) * r ** (m - 2) - (m + 1) * m * r ** (m - 1)
            )

    def value(self, r):
        r = np.asarray(r, dtype=float)
        return self.amplitude * (r ** self.m - r ** (self.m + 1))


# ------------------------------------------------------------------------------
# Sources
# ------------------------------------------------------------------------------

class AnnulusBump(RadialProfile):
    """Smooth radial bump A exp(1 - 1 / (1 - t^2)) with t = (r - c) / w. The
    support is the annulus c - w < r < c + w and the maximum value is A.
    """
    def __init__(self, doc):
        self.center = doc.get(pd.LABEL_CENTER, 0.5)
        self.width = doc.get(pd.LABEL_WIDTH, 0.1)
        if self.center - self.width > 0:
            origin_order = np.inf
        else:
            origin_order = 0.0
        super(AnnulusBump, self).__init__(doc=doc, origin_order=origin_order)
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)

    def value(self, r):
        t2 = ((np.asarray(r, dtype=float) - self.center) / self.width) ** 2
        inside = t2 < 1.0
        with np.errstate(over='ignore', under='ignore'):
            exponent = 1.0 - 1.0 / np.where(inside, 1.0 - t2, 1.0)
            return np.where(inside, self.amplitude * np.exp(exponent), 0.0)


class ConstantProfile(RadialProfile):
    """Constant profile."""
    def __init__(self, doc):
        self.constant = doc.get(pd.LABEL_VALUE, 1.0)
        super(ConstantProfile, self).__init__(
            doc=doc,
            origin_order=0.0 if self.constant != 0 else np.inf,
            leading_power=np.inf
        )

    def d1(self, r):
        return np.zeros_like(np.asarray(r, dtype=float))

    def d2(self, r):
        return np.zeros_like(np.asarray(r, dtype=float))

    def value(self, r):
        return self.constant * np.ones_like(np.asarray(r, dtype=float))


class GaussianBlob(Profile):
    """Gaussian A exp(-|x - x0|^2 / (2 sigma^2)) centered at (x0, y0)."""
    def __init__(self, doc):
        self.x0 = doc.get(pd.LABEL_X0, 0.3)
        self.y0 = doc.get(pd.LABEL_Y0, 0.0)
        super(GaussianBlob, self).__init__(
            doc=doc,
            is_radial=(self.x0 == 0 and self.y0 == 0)
        )
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)
        self.sigma = doc.get(pd.LABEL_SIGMA, 0.1)

    def evaluate(self, r, theta):
        r, theta = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        dx = r * np.cos(theta) - self.x0
        dy = r * np.sin(theta) - self.y0
        d2 = dx ** 2 + dy ** 2
        return self.amplitude * np.exp(-d2 / (2.0 * self.sigma ** 2))


# ------------------------------------------------------------------------------
# Vector sources
# ------------------------------------------------------------------------------

class RadialFlux(object):
    """Vector source f = A r (1 - r) e_r. The exact divergence is
    A (2 - 3 r).
    """
    def __init__(self, doc):
        self.doc = doc
        self.identifier = doc.get(pd.LABEL_ID)
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)

    def divergence(self, r):
        """Exact divergence of the vector source.

        Parameters
        ----------
        r: float or numpy.ndarray
            Radius

        Returns
        -------
        float or numpy.ndarray
        """
        return self.amplitude * (2.0 - 3.0 * np.asarray(r, dtype=float))

    def evaluate(self, r, theta):
        """Polar components of the vector source at the given points.

        Parameters
        ----------
        r: numpy.ndarray
            Radius
        theta: numpy.ndarray
            Angle

        Returns
        -------
        (numpy.ndarray, numpy.ndarray)
        """
        r, _ = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        return self.amplitude * r * (1.0 - r), np.zeros(r.shape)

    def sample(self, grid):
        """Polar components of the vector source at the grid nodes. At the
        center node the Cartesian components (0, 0) are stored.

        Parameters
        ----------
        grid: sdlab.discretization.grid.Grid
            Polar grid

        Returns
        -------
        (numpy.ndarray, numpy.ndarray)
        """
        radial, angular = self.evaluate(grid.r, grid.theta)
        radial[0] = 0.0
        angular[0] = 0.0
        return radial, angular

    def to_dict(self):
        return dict(self.doc)


class AnnulusFlux(RadialFlux):
    """Vector source f = A e_r on the annulus c - w < r < c + w and 0
    elsewhere. The source jumps at both radii of the annulus, so its
    divergence only exists as a distribution.
    """
    def __init__(self, doc):
        super(AnnulusFlux, self).__init__(doc)
        self.center = doc.get(pd.LABEL_CENTER, 0.5)
        self.width = doc.get(pd.LABEL_WIDTH, 0.1)

    def divergence(self, r):
        r = np.asarray(r, dtype=float)
        inside = np.abs(r - self.center) < self.width
        return np.where(inside, self.amplitude / np.where(inside, r, 1.0), 0.0)

    def evaluate(self, r, theta):
        r, _ = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        inside = np.abs(r - self.center) < self.width
        return np.where(inside, self.amplitude, 0.0), np.zeros(r.shape)


# ------------------------------------------------------------------------------
# Stream functions
# ------------------------------------------------------------------------------

class StreamProfile(Profile):
    """Base class for stream functions psi. The associated divergence-free
    field is the perpendicular gradient (-psi_theta / r, psi_r) in polar
    components. All stream functions in the catalog have a vanishing gradient
    at the origin.
    """
    def cartesian(self, x, y):
        """Evaluate the stream function at Cartesian coordinates.

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
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return self.evaluate(np.hypot(x, y), np.arctan2(y, x))

    def velocity(self, r, theta):
        """Polar components of the perpendicular gradient.

        Parameters
        ----------
        r: numpy.ndarray
            Radius
        theta: numpy.ndarray
            Angle

        Returns
        -------
        (numpy.ndarray, numpy.ndarray)
        """
        raise NotImplementedError()


class Dipole(StreamProfile):
    """Stream function A r^2 (1 - r)^2 cos(theta)."""
    def __init__(self, doc):
        super(Dipole, self).__init__(doc=doc, is_radial=False, origin_order=2.0)
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)

    def evaluate(self, r, theta):
        r, theta = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        return self.amplitude * r ** 2 * (1.0 - r) ** 2 * np.cos(theta)

    def velocity(self, r, theta):
        r, theta = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        A = self.amplitude
        radial = A * r * (1.0 - r) ** 2 * np.sin(theta)
        angular = 2.0 * A * r * (1.0 - r) * (1.0 - 2.0 * r) * np.cos(theta)
        return radial, angular


class Vortex(StreamProfile):
    """Radial stream function A exp(-r^2 / (2 sigma^2)). The field is purely
    angular.
    """
    def __init__(self, doc):
        super(Vortex, self).__init__(doc=doc, is_radial=True)
        self.amplitude = doc.get(pd.LABEL_AMPLITUDE, 1.0)
        self.sigma = doc.get(pd.LABEL_SIGMA, 0.2)

    def evaluate(self, r, theta):
        r, _ = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        return self.amplitude * np.exp(-r ** 2 / (2.0 * self.sigma ** 2))

    def velocity(self, r, theta):
        r, _ = np.broadcast_arrays(np.asarray(r, dtype=float), theta)
        s2 = self.sigma ** 2
        angular = -self.amplitude * r / s2 * np.exp(-r ** 2 / (2.0 * s2))
        return np.zeros_like(r), angular


# ------------------------------------------------------------------------------
# Derived profiles
# ------------------------------------------------------------------------------

class ManufacturedSource(RadialProfile):
    """Source g = -Laplace(u) + b_alpha . grad(u) for a radial exact solution u
    and the drift b_alpha = b - alpha x / (|x|^2 + epsilon^2) with a
    divergence-free part b that is orthogonal to radial gradients. For radial u
    the source is g(r) = -u'' - u'/r - alpha r u' / (r^2 + epsilon^2).
    """
    def __init__(self, solution, alpha, epsilon=0.0):
        """Initialize the exact solution and the drift parameters.

        Parameters
        ----------
        solution: sdlab.profile.base.RadialProfile
            Exact solution with closed-form derivatives
        alpha: float
            Coefficient of the singular drift
        epsilon: float, optional
            Regularization parameter
        """
        if solution.leading_power >= 2:
            origin_order = 0.0
        else:
            origin_order = solution.leading_power - 2.0
        super(ManufacturedSource, self).__init__(
            doc={
                pd.LABEL_ID: 'manufactured',
                'solution': solution.to_dict(),
                'alpha': alpha,
                'epsilon': epsilon
            },
            origin_order=origin_order
        )
        self.solution = solution
        self.alpha = alpha
        self.epsilon = epsilon

    def origin_value(self):
        """Limit of the source at the origin for smooth solutions."""
        d2 = float(self.solution.d2(0.0))
        if self.epsilon == 0:
            return -2.0 * d2 - self.alpha * d2
        return -2.0 * d2

    def value(self, r):
        r = np.asarray(r, dtype=float)
        scalar = r.ndim == 0
        r = np.atleast_1d(r)
        g = np.empty_like(r)
        pos = r > 0
        rp = r[pos]
        d1 = self.solution.d1(rp)
        d2 = self.solution.d2(rp)
        drift = -self.alpha * rp * d1 / (rp ** 2 + self.epsilon ** 2)
        g[pos] = -d2 - d1 / rp + drift
        if np.any(~pos):
            if self.origin_order < 0:
                g[~pos] = np.inf
            else:
                g[~pos] = self.origin_value()
        if scalar:
            return float(g[0])
        return g


class WeightedProfile(Profile):
    """Product r^s p(r, theta) of a power of the radius and a profile p."""
    def __init__(self, base, power):
        """Initialize the base profile and the power of the radial weight.

        Parameters
        ----------
        base: sdlab.profile.base.Profile
            Weighted profile
        power: float
            Exponent of the radial weight
        """
        super(WeightedProfile, self).__init__(
            doc={pd.LABEL_ID: 'weighted', 'base': base.to_dict(), 'power': power},
            is_radial=base.is_radial,
            origin_order=base.origin_order + power
        )
        self.base = base
        self.power = power

    def evaluate(self, r, theta):
        r = np.asarray(r, dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            return r ** self.power * self.base.evaluate(r, theta)

    def center_value(self):
        if self.origin_order > 0:
            return 0.0
        if self.power == 0:
            return self.base.center_value()
        raise InvalidProfileError(
            'weighted profile is undefined at the origin (order {})'.format(
                self.origin_order
            )
        )
