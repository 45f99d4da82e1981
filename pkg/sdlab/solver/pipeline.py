# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Solution pipelines for the singular drift problem.

- solve_direct: assemble and solve a single system.
- solve_regularized: continuation over a decreasing sequence of
  regularization parameters (alpha >= 0).
- solve_pinned_cov: change of variables u = r^|alpha| w for the pinned
  problem with alpha < 0.
- solve_pinned_fixed_point: Picard iteration that moves the divergence-free
  part of the drift to the right-hand side of the pinned problem.
"""

import logging
import numpy as np

from scipy.sparse import coo_matrix, diags

from sdlab.discretization.field import DiscreteField
from sdlab.drift.base import DriftSpec, VectorFieldSample
from sdlab.error import InvalidProblemError, InvalidProfileError
from sdlab.problem.assemble import (
    assemble, center_entries, center_source, drift_matrix
)
from sdlab.problem.base import LinearSystem, ProblemSpec, RHS_SCALAR
from sdlab.profile.base import WeightedProfile
from sdlab.solver.linear import METHOD_GMRES, build_preconditioner, linear_solve
from sdlab.solver.report import SolveReport

import sdlab.analysis.estimate as est


logger = logging.getLogger(__name__)


"""Default regularization schedule 10^-1, ..., 10^-4."""
DEFAULT_SCHEDULE = [10.0 ** -k for k in range(1, 5)]

"""Variants of the change of variables."""
COV_DIRECT = 'direct'
COV_SIMILARITY = 'similarity'

COV_MODES = [COV_DIRECT, COV_SIMILARITY]

"""Fixed point iteration parameters."""
MAX_OUTER_ITERATIONS = 50
MAX_GROWTH_STEPS = 3


def solve_direct(spec, grid, tol=1e-8, method=METHOD_GMRES, radial_exact=False):
    """Assemble and solve the system for the given problem.

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification
    grid: sdlab.discretization.grid.Grid
        Polar grid
    tol: float, optional
        Relative residual tolerance
    method: string, optional
        Krylov method
    radial_exact: bool, optional
        Assemble with the exact singular drift

    Returns
    -------
    (sdlab.discretization.field.DiscreteField, sdlab.solver.report.SolveReport)
    """
    system = assemble(spec, grid, radial_exact=radial_exact)
    u, report = linear_solve(system, tol=tol, method=method)
    report.epsilon_schedule = [spec.drift.epsilon] if spec.drift.epsilon > 0 else list()
    return u, report


def solve_regularized(
    spec, grid, eps_schedule=None, tol=1e-8, method=METHOD_GMRES,
    stop_early=True
):
    """Solve the regularized problems for a strictly decreasing sequence of
    regularization parameters. Each solve starts from the previous solution.
    If stop_early is True the iteration stops once the energy norm of the
    difference between successive solutions falls below the tolerance. The
    skipped parameters are logged and listed in the report messages.

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification with alpha >= 0
    grid: sdlab.discretization.grid.Grid
        Polar grid
    eps_schedule: list(float), optional
        Strictly decreasing positive regularization parameters
    tol: float, optional
        Relative residual tolerance and increment threshold
    method: string, optional
        Krylov method
    stop_early: bool, optional
        Stop once the increment falls below the tolerance

    Returns
    -------
    (sdlab.discretization.field.DiscreteField, sdlab.solver.report.SolveReport)

    Raises
    ------
    sdlab.error.InvalidProblemError
    """
    if spec.drift.alpha < 0:
        raise InvalidProblemError(
            'regularization continuation requires alpha >= 0'
        )
    schedule = list(eps_schedule) if not eps_schedule is None else DEFAULT_SCHEDULE
    if len(schedule) == 0:
        raise InvalidProblemError('empty regularization schedule')
    for e1, e2 in zip(schedule[:-1], schedule[1:]):
        if not e2 < e1:
            raise InvalidProblemError('regularization schedule not strictly decreasing')
    if schedule[-1] <= 0:
        raise InvalidProblemError('regularization parameters must be positive')
    u = None
    used = list()
    increments = list()
    iterations = 0
    converged = True
    final_residual = 0.0
    messages = list()
    for i, eps in enumerate(schedule):
        system = assemble(spec.replace(drift=spec.drift.with_epsilon(eps)), grid)
        x0 = u.values if not u is None else None
        u_eps, report = linear_solve(system, tol=tol, method=method, x0=x0)
        iterations += report.iterations
        converged = converged and report.converged
        final_residual = report.final_residual
        messages.extend(report.messages)
        used.append(eps)
        if not u is None:
            increment = est.energy_norm(u_eps - u)
            increments.append(increment)
            logger.info('epsilon=%g increment=%g', eps, increment)
            u = u_eps
            if stop_early and increment < tol:
                skipped = schedule[i + 1:]
                messages.append('increments below tolerance at epsilon={}'.format(eps))
                if skipped:
                    logger.info('skip epsilon values %s', skipped)
                    messages.append('skipped epsilon={}'.format(skipped))
                break
        else:
            u = u_eps
    return u, SolveReport(
        iterations=iterations,
        final_residual=final_residual,
        converged=converged,
        epsilon_schedule=used,
        increments=increments,
        method='regularized',
        messages=messages
    )


def solve_pinned_cov(spec, grid, tol=1e-8, mode=COV_SIMILARITY, method=METHOD_GMRES):
    """Solve the pinned problem for alpha < 0 via the substitution
    u = r^a w with a = |alpha|. The function w solves

        -Laplace(w) - a x / |x|^2 . grad(w) = r^-a g

    which is uniquely solvable without pinning. In similarity mode the system
    for w is the row and column scaled pinned system with the center row
    replaced by the finite volume row for w. In direct mode the system for w
    is assembled independently.

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification with alpha < 0 and no divergence-free part
    grid: sdlab.discretization.grid.Grid
        Polar grid
    tol: float, optional
        Relative residual tolerance
    mode: string, optional
        Variant of the change of variables (similarity or direct)
    method: string, optional
        Krylov method

    Returns
    -------
    (sdlab.discretization.field.DiscreteField, sdlab.solver.report.SolveReport)

    Raises
    ------
    sdlab.error.InvalidProblemError
    """
    drift = spec.drift
    if drift.alpha >= 0:
        raise InvalidProblemError('change of variables requires alpha < 0')
    if not drift.divfree.is_none():
        raise InvalidProblemError(
            'change of variables requires a purely radial drift'
        )
    if not mode in COV_MODES:
        raise InvalidProblemError('unknown change of variables \'{}\''.format(mode))
    a = -drift.alpha
    center_rhs = weighted_center_source(spec, grid, a)
    pinned = assemble(spec.replace(pinned=True), grid, radial_exact=True)
    scale = grid.r ** a
    w_drift = DriftSpec(alpha=a, epsilon=drift.epsilon)
    if mode == COV_SIMILARITY:
        row_scale = np.ones(grid.node_count)
        row_scale[1:] = 1.0 / scale[1:]
        mask = np.ones(grid.node_count)
        mask[0] = 0.0
        matrix = diags(mask * row_scale).dot(pinned.matrix).dot(diags(scale))
        zero = np.zeros(grid.node_count)
        rows, cols, vals = center_entries(
            grid,
            w_drift,
            VectorFieldSample(grid, zero, zero),
            scheme=spec.scheme,
            alpha=a
        )
        N = grid.node_count
        closure = coo_matrix((vals, (rows, cols)), shape=(N, N))
        rhs = row_scale * pinned.rhs
        rhs[0] = center_rhs
        w_system = LinearSystem(
            grid=grid,
            matrix=(matrix + closure).tocsr(),
            rhs=rhs,
            pinned=False,
            scheme=spec.scheme
        )
    else:
        w_spec = ProblemSpec(drift=w_drift, scheme=spec.scheme)
        w_system = assemble(w_spec, grid, radial_exact=True)
        rhs = np.zeros(grid.node_count)
        rhs[grid.interior] = pinned.rhs[grid.interior] / scale[grid.interior]
        rhs[0] = center_rhs
        w_system = w_system.with_rhs(rhs)
    w, report = linear_solve(w_system, tol=tol, method=method)
    u = DiscreteField(grid, scale * w.values)
    report.method = 'cov-{}'.format(mode)
    report.diagnostics['wCenter'] = float(w.values[0])
    report.diagnostics['interiorResidual'] = pinned.interior_residual(u)
    logger.info(
        'change of variables (%s): w(0)=%g, interior residual %g',
        mode,
        w.values[0],
        report.diagnostics['interiorResidual']
    )
    return u, report


def solve_pinned_fixed_point(
    spec, grid, tol=1e-8, max_outer=MAX_OUTER_ITERATIONS, damping=1.0,
    method=METHOD_GMRES
):
    """Solve the pinned problem by a fixed point iteration on the
    divergence-free part b of the drift. Each step solves

        L_0 u = g - b . grad(v_k)

    with the pinned operator L_0 of the singular drift alone and sets
    v_{k+1} = (1 - s) v_k + s u for the damping s. The iteration is stopped
    when the L_q increment relative to the iterate falls below tol, or
    reported as not converged after MAX_GROWTH_STEPS consecutive growing
    increments.

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification
    grid: sdlab.discretization.grid.Grid
        Polar grid
    tol: float, optional
        Tolerance for the relative increments
    max_outer: int, optional
        Maximal number of outer iterations
    damping: float, optional
        Damping factor in (0, 1]
    method: string, optional
        Krylov method

    Returns
    -------
    (sdlab.discretization.field.DiscreteField, sdlab.solver.report.SolveReport)

    Raises
    ------
    sdlab.error.InvalidProblemError
    """
    if not 0 < damping <= 1:
        raise InvalidProblemError('damping must be in (0, 1]')
    if max_outer < 1:
        raise InvalidProblemError('invalid number of outer iterations')
    base = spec.replace(drift=spec.drift.without_divfree(), pinned=True)
    L0 = assemble(base, grid, radial_exact=True)
    radial, angular = spec.drift.divfree.sample(grid)
    D = drift_matrix(grid, VectorFieldSample(grid, radial, angular), spec.scheme)
    D.eliminate_zeros()
    M = build_preconditioner(L0.matrix)
    inner_tol = tol / 10.0
    v = DiscreteField.zeros(grid)
    increments = list()
    messages = list()
    iterations = 0
    final_residual = 0.0
    converged = False
    growth = 0
    k = 0
    for k in range(1, max_outer + 1):
        rhs = L0.rhs - D.dot(v.values)
        u, report = linear_solve(
            L0.with_rhs(rhs),
            tol=inner_tol,
            method=method,
            x0=v.values,
            preconditioner=M
        )
        iterations += report.iterations
        final_residual = report.final_residual
        v_next = v * (1.0 - damping) + u * damping
        increment = est.lq_norm(v_next - v, spec.q)
        reference = est.lq_norm(v_next, spec.q)
        increments.append(increment)
        v = v_next
        logger.info('fixed point step %d: increment %g', k, increment)
        if D.nnz == 0:
            converged = report.converged
            break
        if increment <= tol * reference or reference == 0:
            converged = report.converged
            break
        if len(increments) > 1 and increments[-1] > increments[-2]:
            growth += 1
        else:
            growth = 0
        if growth >= MAX_GROWTH_STEPS:
            messages.append('fixed point iteration is not contracting')
            logger.warning('fixed point iteration is not contracting after %d steps', k)
            break
    else:
        messages.append('maximal number of outer iterations reached')
    full = L0.matrix + D
    residual = np.linalg.norm(L0.rhs - full.dot(v.values))
    norm_b = np.linalg.norm(L0.rhs)
    return v, SolveReport(
        iterations=iterations,
        final_residual=final_residual,
        converged=converged,
        fixed_point_iters=k,
        increments=increments,
        method='fixed-point',
        messages=messages,
        diagnostics={
            'fullResidual': float(residual / norm_b) if norm_b > 0 else float(residual)
        }
    )


def weighted_center_source(spec, grid, power):
    """Mean of r^-power g over the center cell with radius h_r / 2.

    Parameters
    ----------
    spec: sdlab.problem.base.ProblemSpec
        Problem specification
    grid: sdlab.discretization.grid.Grid
        Polar grid
    power: float
        Exponent of the weight r^-power

    Returns
    -------
    float

    Raises
    ------
    sdlab.error.InvalidProblemError
    """
    rho = 0.5 * grid.h_r
    if spec.rhs_mode == RHS_SCALAR:
        weighted = WeightedProfile(spec.source, -power)
        if not weighted.is_integrable():
            raise InvalidProblemError(
                'weighted source r^{} g is not integrable at the origin'.format(-power)
            )
        try:
            return weighted.cell_average(rho)
        except InvalidProfileError as ex:
            raise InvalidProblemError(str(ex))
    g0 = center_source(spec, grid)
    if g0 == 0:
        return 0.0
    if power >= 2:
        raise InvalidProblemError(
            'weighted source r^{} g is not integrable at the origin'.format(-power)
        )
    return g0 * 2.0 * rho ** -power / (2.0 - power)
