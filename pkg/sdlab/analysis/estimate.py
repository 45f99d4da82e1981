# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Measurements on discrete solutions: energy, sup and gradient L^p norms,
oscillation over the dyadic balls B_R with R = 2^-k around the origin, the
Hoelder exponent fitted to the oscillation decay, and convergence orders.

All integrals use the quadrature weights of the grid and the centered
gradient of the polar difference operators.
"""

import logging
import numpy as np

from sdlab.drift.base import DriftSpec
from sdlab.error import AnalysisError
from sdlab.problem.assemble import assemble
from sdlab.problem.base import ProblemSpec
from sdlab.solver.linear import linear_solve

import sdlab.discretization.operators as op


logger = logging.getLogger(__name__)


"""Exponents for the gradient L^p norms."""
GRAD_LP_EXPONENTS = [2.0, 2.5, 3.0, 4.0]

"""Bounds for the fitted Hoelder exponent."""
MAX_MU = 1.5
MIN_MU = 0.0

"""Number of radii for the Hoelder fit and the contraction check."""
FIT_RADII = 4
CONTRACTION_RADII = 3
MIN_OSC_RADII = 3
MIN_CONTRACTION_RADII = 4

"""Oscillations below this threshold are treated as zero."""
OSC_THRESHOLD = 10.0 * np.finfo(float).eps


"""Labels for serialization."""
LABEL_ENERGY_NORM = 'energyNorm'
LABEL_FITTED_MU = 'fittedMu'
LABEL_FITTED_ORDER = 'fittedOrder'
LABEL_GRAD_LP = 'gradLp'
LABEL_OSC_TABLE = 'oscTable'
LABEL_SUP_NORM = 'supNorm'


class EstimateReport(object):
    """Measurements of a discrete solution. The oscillation table is a list
    of pairs (R, osc over B_R) with strictly decreasing radii.
    """
    def __init__(
        self, energy_norm, sup_norm, grad_lp, osc_table, fitted_mu,
        fitted_order=None
    ):
        """Initialize the report components.

        Parameters
        ----------
        energy_norm: float
            Discrete energy norm
        sup_norm: float
            Maximum absolute nodal value
        grad_lp: dict
            Gradient L^p norms keyed by the exponent p
        osc_table: list((float, float))
            Radius and oscillation pairs
        fitted_mu: float
            Fitted Hoelder exponent at the origin
        fitted_order: float, optional
            Convergence order (if applicable)
        """
        self.energy_norm = float(energy_norm)
        self.sup_norm = float(sup_norm)
        self.grad_lp = {float(p): float(v) for p, v in grad_lp.items()}
        self.osc_table = [(float(R), float(osc)) for R, osc in osc_table]
        self.fitted_mu = float(fitted_mu)
        self.fitted_order = float(fitted_order) if not fitted_order is None else None

    @staticmethod
    def from_dict(doc):
        """Get report from its dictionary serialization.

        Parameters
        ----------
        doc: dict
            Dictionary serialization as created by to_dict()

        Returns
        -------
        sdlab.analysis.estimate.EstimateReport
        """
        return EstimateReport(
            energy_norm=doc[LABEL_ENERGY_NORM],
            sup_norm=doc[LABEL_SUP_NORM],
            grad_lp={float(p): v for p, v in doc[LABEL_GRAD_LP].items()},
            osc_table=doc[LABEL_OSC_TABLE],
            fitted_mu=doc[LABEL_FITTED_MU],
            fitted_order=doc.get(LABEL_FITTED_ORDER)
        )

    def to_dict(self):
        """Get dictionary serialization of the report. Keys of the gradient
        norms are the string representations of the exponents.

        Returns
        -------
        dict
        """
        return {
            LABEL_ENERGY_NORM: self.energy_norm,
            LABEL_SUP_NORM: self.sup_norm,
            LABEL_GRAD_LP: {repr(p): v for p, v in sorted(self.grad_lp.items())},
            LABEL_OSC_TABLE: [[R, osc] for R, osc in self.osc_table],
            LABEL_FITTED_MU: self.fitted_mu,
            LABEL_FITTED_ORDER: self.fitted_order
        }


# ------------------------------------------------------------------------------
# Norms
# ------------------------------------------------------------------------------

def energy_norm(u):
    """Discrete energy norm (||grad u||^2 + ||u||^2)^(1/2).

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Nodal values

    Returns
    -------
    float
    """
    grid = u.grid
    g = op.gradient_magnitude(grid, u.values)
    return float(np.sqrt(np.dot(grid.quad_weights, g ** 2 + u.values ** 2)))


def grad_lp(u, exponents=None):
    """Discrete L^p norms of the gradient magnitude.

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Nodal values
    exponents: list(float), optional
        Exponents p (default 2, 2.5, 3, 4)

    Returns
    -------
    dict
    """
    if exponents is None:
        exponents = GRAD_LP_EXPONENTS
    grid = u.grid
    g = op.gradient_magnitude(grid, u.values)
    result = dict()
    for p in exponents:
        result[float(p)] = float(np.dot(grid.quad_weights, g ** p) ** (1.0 / p))
    return result


def lq_norm(u, q):
    """Discrete L^q norm of the nodal values.

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Nodal values
    q: float
        Exponent

    Returns
    -------
    float
    """
    weights = u.grid.quad_weights
    return float(np.dot(weights, np.abs(u.values) ** q) ** (1.0 / q))


def sup_norm(u):
    """Maximum absolute nodal value.

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Nodal values

    Returns
    -------
    float
    """
    return u.sup_norm()


def source_potential_norm(source, grid, tol=1e-10):
    """L2 norm of the gradient of the solution w of -Laplace(w) = g with
    homogeneous Dirichlet conditions.

    Parameters
    ----------
    source: sdlab.profile.base.Profile
        Scalar source g
    grid: sdlab.discretization.grid.Grid
        Polar grid
    tol: float, optional
        Tolerance for the Poisson solve

    Returns
    -------
    float
    """
    spec = ProblemSpec(drift=DriftSpec(alpha=0.0), source=source)
    w, _ = linear_solve(assemble(spec, grid), tol=tol)
    g = op.gradient_magnitude(grid, w.values)
    return float(np.sqrt(np.dot(grid.quad_weights, g ** 2)))


# ------------------------------------------------------------------------------
# Oscillation
# ------------------------------------------------------------------------------

def oscillation_table(u):
    """Oscillation max - min over the nodes in B_R for R = 2^-k with
    k = 0, ..., floor(log2(1 / (4 h_r))).

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Nodal values

    Returns
    -------
    list((float, float))

    Raises
    ------
    sdlab.error.AnalysisError
    """
    grid = u.grid
    k_max = int(np.floor(np.log2(1.0 / (4.0 * grid.h_r)) + 1e-12))
    if k_max + 1 < MIN_OSC_RADII:
        raise AnalysisError(
            'grid with {} rings too coarse for {} oscillation radii'.format(
                grid.n_r,
                MIN_OSC_RADII
            )
        )
    table = list()
    for k in range(k_max + 1):
        R = 2.0 ** -k
        ball = u.values[grid.r <= R + 1e-12]
        table.append((R, float(np.max(ball) - np.min(ball))))
    return table


def fitted_mu(osc_table):
    """Least-squares slope of log osc against log R over the FIT_RADII
    smallest radii with non-zero oscillation. The result is clipped to
    [0, 1.5] and is 0 if fewer than two radii are usable.

    Parameters
    ----------
    osc_table: list((float, float))
        Radius and oscillation pairs

    Returns
    -------
    float
    """
    usable = [(R, osc) for R, osc in osc_table if osc > OSC_THRESHOLD]
    usable = usable[-FIT_RADII:]
    if len(usable) < 2:
        return 0.0
    R = np.log([p[0] for p in usable])
    osc = np.log([p[1] for p in usable])
    slope = np.polyfit(R, osc, 1)[0]
    return float(np.clip(slope, MIN_MU, MAX_MU))


def oscillation_contraction(u, q=None, f_norm=None):
    """Ratios osc(B_{R/2}) / osc(B_{2R}) for all dyadic radii R that have both
    neighbors in the oscillation table. Radii with osc(B_{2R}) below the
    threshold are skipped. If q and f_norm are given the forcing term
    R^(1 - 2/q) ||f|| is logged with every ratio.

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Nodal values
    q: float, optional
        Integrability exponent of the source
    f_norm: float, optional
        Norm of the source

    Returns
    -------
    list((float, float))

    Raises
    ------
    sdlab.error.AnalysisError
    """
    table = oscillation_table(u)
    if len(table) < MIN_CONTRACTION_RADII:
        raise AnalysisError(
            'contraction requires {} oscillation radii'.format(
                MIN_CONTRACTION_RADII
            )
        )
    result = list()
    for k in range(1, len(table) - 1):
        R = table[k][0]
        outer = table[k - 1][1]
        inner = table[k + 1][1]
        if outer <= OSC_THRESHOLD:
            continue
        ratio = inner / outer
        if not q is None and not f_norm is None:
            logger.debug(
                'R=%g ratio=%g forcing=%g',
                R,
                ratio,
                R ** (1.0 - 2.0 / q) * f_norm
            )
        result.append((R, ratio))
    return result


def max_contraction(ratios, count=CONTRACTION_RADII):
    """Maximal contraction ratio over the given number of smallest radii.

    Parameters
    ----------
    ratios: list((float, float))
        Result of oscillation_contraction
    count: int, optional
        Number of smallest radii

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.AnalysisError
    """
    if len(ratios) == 0:
        raise AnalysisError('no contraction ratios')
    return float(max(ratio for _, ratio in ratios[-count:]))


# ------------------------------------------------------------------------------
# Reports
# ------------------------------------------------------------------------------

def fit_convergence_order(errors, h_values):
    """Least-squares slope of log error against log h.

    Parameters
    ----------
    errors: list(float)
        Positive errors
    h_values: list(float)
        Strictly decreasing mesh widths

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.AnalysisError
    """
    if len(errors) != len(h_values) or len(errors) < 3:
        raise AnalysisError('convergence order requires three or more pairs')
    if any(e <= 0 for e in errors):
        raise AnalysisError('errors must be positive')
    for h1, h2 in zip(h_values[:-1], h_values[1:]):
        if not h2 < h1:
            raise AnalysisError('mesh widths not strictly decreasing')
    return float(np.polyfit(np.log(h_values), np.log(errors), 1)[0])


def measure(u, fitted_order=None):
    """Compute all measurements for a discrete solution.

    Parameters
    ----------
    u: sdlab.discretization.field.DiscreteField
        Nodal values
    fitted_order: float, optional
        Convergence order to record in the report

    Returns
    -------
    sdlab.analysis.estimate.EstimateReport

    Raises
    ------
    sdlab.error.AnalysisError
    """
    table = oscillation_table(u)
    return EstimateReport(
        energy_norm=energy_norm(u),
        sup_norm=sup_norm(u),
        grad_lp=grad_lp(u),
        osc_table=table,
        fitted_mu=fitted_mu(table),
        fitted_order=fitted_order
    )
