# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Assembly of the finite difference system on the polar grid.

Interior rows discretize

    -u_rr - u_r / r - u_tt / r^2 + c_r u_r + c_t u_t

with c_r the radial drift component and c_t the angular drift component
divided by r. The centered scheme uses centered differences for all first
order terms. The upwind scheme upwinds the complete first order radial
coefficient c_r - 1/r (the u_r / r term of the Laplacian included) and the
angular term. Upwind rows have non-positive off-diagonal entries and a
positive diagonal.

The center row is a finite volume balance over the disk with radius
rho = h_r / 2:

    (4 + 2 alpha phi) / h_r^2 * (u_0 - mean(u on ring 1)) + b(0) . grad u(0)

with phi = 1 - (epsilon^2 / rho^2) ln(1 + rho^2 / epsilon^2) the average of
the regularized singular flux (phi = 1 for epsilon = 0). Its right-hand side
is the mean of g over the disk. The row is exact for u = 1 - r^2 at every
epsilon. Boundary rows and the center row of pinned problems are identity
rows with right-hand side 0.
"""

import logging
import numpy as np

from scipy.sparse import coo_matrix

from sdlab.drift.base import eval_drift
from sdlab.error import AssemblyError, InvalidProfileError, UnknownSchemeError
from sdlab.problem.base import LinearSystem, SCHEMES, SCHEME_UPWIND


logger = logging.getLogger(__name__)


def assemble(spec, grid, radial_exact=False):
    """Assemble the linear system for a problem specification.

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification
    grid: sdlab.discretization.grid.Grid
        Polar grid
    radial_exact: bool, optional
        Evaluate the singular drift with epsilon = 0 at ring nodes. The center
        row then uses the exact singular flux.

    Returns
    -------
    sdlab.problem.base.LinearSystem

    Raises
    ------
    sdlab.error.AssemblyError
    """
    if not spec.scheme in SCHEMES:
        raise UnknownSchemeError(spec.scheme)
    drift = spec.drift
    if drift.epsilon == 0 and drift.alpha != 0:
        if not spec.pinned and not radial_exact:
            raise AssemblyError(
                'unpinned problem with singular drift requires epsilon > 0'
            )
    sample = eval_drift(drift, grid, radial_exact=True)
    rows, cols, vals = interior_entries(
        grid,
        sample.radial,
        sample.angular,
        scheme=spec.scheme
    )
    parts = [(rows, cols, vals), boundary_entries(grid)]
    if spec.pinned:
        parts.append((np.array([0]), np.array([0]), np.array([1.0])))
    else:
        parts.append(center_entries(grid, drift, sample, scheme=spec.scheme))
    matrix = _to_csr(grid, parts)
    rhs = source_vector(spec, grid)
    logger.debug(
        'assembled %s system on %s grid (alpha=%g, epsilon=%g, pinned=%s)',
        spec.scheme,
        grid.shape(),
        drift.alpha,
        drift.epsilon,
        spec.pinned
    )
    return LinearSystem(
        grid=grid,
        matrix=matrix,
        rhs=rhs,
        pinned=spec.pinned,
        scheme=spec.scheme
    )


def boundary_entries(grid):
    """Identity rows for all boundary nodes.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    (numpy.ndarray, numpy.ndarray, numpy.ndarray)
    """
    nodes = grid.ring_nodes(grid.n_r)
    return nodes, nodes, np.ones(nodes.size)


def center_entries(grid, drift, sample, scheme, alpha=None):
    """Finite volume row for the center node.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    drift: sdlab.drift.base.DriftSpec
        Drift specification
    sample: sdlab.drift.base.VectorFieldSample
        Sampled drift (Cartesian components at the center)
    scheme: string
        Discretization scheme
    alpha: float, optional
        Coefficient of the singular drift. Defaults to the drift coefficient.

    Returns
    -------
    (numpy.ndarray, numpy.ndarray, numpy.ndarray)
    """
    if alpha is None:
        alpha = drift.alpha
    h = grid.h_r
    m = grid.n_theta
    ring = grid.ring_nodes(1)
    phi = center_flux_factor(drift.epsilon, h)
    kappa = (4.0 + 2.0 * alpha * phi) / h ** 2
    rows = [np.zeros(m + 1, dtype=int)]
    cols = [np.concatenate([[0], ring])]
    vals = [np.concatenate([[kappa], -kappa / m * np.ones(m)])]
    bx = sample.radial[0]
    by = sample.angular[0]
    norm_b = np.hypot(bx, by)
    if norm_b > 0:
        if scheme == SCHEME_UPWIND:
            upstream = np.arctan2(-by, -bx) % (2.0 * np.pi)
            j = int(np.round(upstream / grid.h_theta)) % m
            rows.append(np.array([0, 0]))
            cols.append(np.array([0, ring[j]]))
            vals.append(np.array([norm_b / h, -norm_b / h]))
        else:
            theta = grid.angles()
            coeff = 2.0 / (m * h) * (bx * np.cos(theta) + by * np.sin(theta))
            rows.append(np.zeros(m, dtype=int))
            cols.append(ring)
            vals.append(coeff)
    return np.concatenate(rows), np.concatenate(cols), np.concatenate(vals)


def center_flux_factor(epsilon, h):
    """Mean of r^2 / (r^2 + epsilon^2) weighted with the flux of a quadratic
    profile over the disk with radius h / 2.

    Parameters
    ----------
    epsilon: float
        Regularization parameter
    h: float
        Radial mesh width

    Returns
    -------
    float
    """
    if epsilon == 0:
        return 1.0
    rho2 = (0.5 * h) ** 2
    eps2 = epsilon ** 2
    return 1.0 - eps2 / rho2 * np.log1p(rho2 / eps2)


def center_source(spec, grid):
    """Right-hand side of the center row of an unpinned problem.

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.AssemblyError
    """
    if spec.is_vector_mode():
        return float(vector_load(spec.source, grid)[0])
    try:
        return spec.source.cell_average(0.5 * grid.h_r)
    except InvalidProfileError as ex:
        raise AssemblyError(str(ex))


def drift_matrix(grid, sample, scheme):
    """Matrix of the first order drift terms c_r u_r + c_t u_t at interior
    nodes. Rows of the center and of the boundary nodes are zero.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    sample: sdlab.drift.base.VectorFieldSample
        Sampled drift
    scheme: string
        Discretization scheme

    Returns
    -------
    scipy.sparse.csr_matrix
    """
    entries = interior_entries(
        grid,
        sample.radial,
        sample.angular,
        scheme=scheme,
        diffusion=False
    )
    return _to_csr(grid, [entries])


def interior_entries(grid, radial, angular, scheme, diffusion=True):
    """Stencil entries of all interior rows.

    Parameters
    ----------
    grid: sdlab.discretization.grid.Grid
        Polar grid
    radial: numpy.ndarray
        Radial drift component
    angular: numpy.ndarray
        Angular drift component
    scheme: string
        Discretization scheme
    diffusion: bool, optional
        Include the Laplacian

    Returns
    -------
    (numpy.ndarray, numpy.ndarray, numpy.ndarray)
    """
    n = grid.n_r
    m = grid.n_theta
    h = grid.h_r
    ht = grid.h_theta
    I, J = np.meshgrid(np.arange(1, n), np.arange(m), indexing='ij')
    I = I.ravel()
    J = J.ravel()
    k = 1 + (I - 1) * m + J
    k_in = np.where(I == 1, 0, 1 + (I - 2) * m + J)
    k_out = 1 + I * m + J
    k_jp = 1 + (I - 1) * m + (J + 1) % m
    k_jm = 1 + (I - 1) * m + (J - 1) % m
    r = I / float(n)
    a = radial[k].copy()
    c_t = angular[k] / r
    diag = np.zeros(k.size)
    w_in = np.zeros(k.size)
    w_out = np.zeros(k.size)
    w_jp = np.zeros(k.size)
    w_jm = np.zeros(k.size)
    if diffusion:
        a -= 1.0 / r
        d_r = 1.0 / h ** 2
        d_t = 1.0 / (r * ht) ** 2
        diag += 2.0 * d_r + 2.0 * d_t
        w_in -= d_r
        w_out -= d_r
        w_jp -= d_t
        w_jm -= d_t
    if scheme == SCHEME_UPWIND:
        diag += np.abs(a) / h + np.abs(c_t) / ht
        w_in -= np.maximum(a, 0.0) / h
        w_out += np.minimum(a, 0.0) / h
        w_jp += np.minimum(c_t, 0.0) / ht
        w_jm -= np.maximum(c_t, 0.0) / ht
    else:
        w_in -= a / (2.0 * h)
        w_out += a / (2.0 * h)
        w_jp += c_t / (2.0 * ht)
        w_jm -= c_t / (2.0 * ht)
    rows = np.concatenate([k, k, k, k, k])
    cols = np.concatenate([k, k_in, k_out, k_jp, k_jm])
    vals = np.concatenate([diag, w_in, w_out, w_jp, w_jm])
    return rows, cols, vals


def source_vector(spec, grid):
    """Right-hand side vector. Interior rows hold the source at the node (the
    weak load of the cell in vector mode), boundary rows are 0, and the
    center row holds the mean source over the center cell (0 if pinned).

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    numpy.ndarray

    Raises
    ------
    sdlab.error.AssemblyError
    """
    rhs = np.zeros(grid.node_count)
    interior = grid.interior
    if spec.is_vector_mode():
        rhs[interior] = vector_load(spec.source, grid)[interior]
    else:
        rhs[interior] = spec.source.evaluate(
            grid.r[interior],
            grid.theta[interior]
        )
    if not spec.pinned:
        rhs[0] = center_source(spec, grid)
    return rhs


def vector_load(source, grid):
    """Weak load of a vector source f. The load of a node is the integral of
    f . grad(eta) for the indicator eta of its control cell divided by the
    cell area, i.e., the negative outward flux of f through the cell faces
    per unit area. Fluxes are evaluated at the face midpoints, so sources
    that jump between nodes are integrated without smoothing. The center
    cell is the disk with radius h_r / 2. Boundary entries are 0.

    Parameters
    ----------
    source: sdlab.profile.base.RadialFlux
        Vector source
    grid: sdlab.discretization.grid.Grid
        Polar grid

    Returns
    -------
    numpy.ndarray
    """
    h = grid.h_r
    ht = grid.h_theta
    load = np.zeros(grid.node_count)
    r = grid.r[grid.interior]
    theta = grid.theta[grid.interior]
    r_out = r + 0.5 * h
    r_in = r - 0.5 * h
    f_out, _ = source.evaluate(r_out, theta)
    f_in, _ = source.evaluate(r_in, theta)
    _, f_left = source.evaluate(r, theta + 0.5 * ht)
    _, f_right = source.evaluate(r, theta - 0.5 * ht)
    flux = (r_out * f_out - r_in * f_in) / (r * h)
    flux += (f_left - f_right) / (r * ht)
    load[grid.interior] = -flux
    rho = 0.5 * h
    f_center, _ = source.evaluate(rho * np.ones(grid.n_theta), grid.angles())
    load[0] = -2.0 * np.mean(f_center) / rho
    return load


def _to_csr(grid, parts):
    """Sum the given triplets into a square matrix in CSR format. Duplicate
    entries are added.
    """
    rows = np.concatenate([p[0] for p in parts])
    cols = np.concatenate([p[1] for p in parts])
    vals = np.concatenate([p[2] for p in parts])
    N = grid.node_count
    return coo_matrix((vals, (rows, cols)), shape=(N, N)).tocsr()
