# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Iterative solution of assembled linear systems. Systems are solved with
restarted GMRES (default) or BiCGStab from scipy. Both are preconditioned by
an incomplete LU factorization of the system matrix. Convergence is decided
on the true relative residual ||b - A x|| / ||b||.
"""

import logging
import numpy as np

from scipy.sparse.linalg import LinearOperator, bicgstab, gmres, norm, spilu

from sdlab.discretization.field import DiscreteField
from sdlab.error import SolverError
from sdlab.solver.report import SolveReport


logger = logging.getLogger(__name__)


"""Identifier for Krylov methods."""
METHOD_BICGSTAB = 'bicgstab'
METHOD_GMRES = 'gmres'

METHODS = [METHOD_BICGSTAB, METHOD_GMRES]


"""Solver parameters."""
GMRES_RESTART = 100
MAX_ITERATIONS = 2000
MAX_REFINEMENTS = 3
ILU_DROP_TOL = 1e-8
ILU_FILL_FACTOR = 30
MAX_TOLERANCE = 1e-2


def build_preconditioner(matrix):
    """Incomplete LU preconditioner for the given matrix. Returns None if the
    factorization fails.

    Parameters
    ----------
    matrix: scipy.sparse.spmatrix
        System matrix

    Returns
    -------
    scipy.sparse.linalg.LinearOperator
    """
    try:
        ilu = spilu(
            matrix.tocsc(),
            drop_tol=ILU_DROP_TOL,
            fill_factor=ILU_FILL_FACTOR
        )
    except RuntimeError as ex:
        logger.warning('incomplete LU failed (%s); solving without preconditioner', ex)
        return None
    return LinearOperator(matrix.shape, ilu.solve)


def check_system(system):
    """Ensure that the system matrix is square and has no zero rows.

    Parameters
    ----------
    system: sdlab.problem.base.LinearSystem
        Linear system

    Raises
    ------
    sdlab.error.SolverError
    """
    A = system.matrix
    if A.shape[0] != A.shape[1]:
        raise SolverError('system matrix is not square {}'.format(A.shape))
    if system.rhs.shape[0] != A.shape[0]:
        raise SolverError('right-hand side does not match system size')
    row_norm = np.asarray(abs(A).sum(axis=1)).ravel()
    zero_rows = np.flatnonzero(row_norm == 0)
    if zero_rows.size > 0:
        raise SolverError('structurally singular row {}'.format(zero_rows[0]))


def condition_estimate(system, steps=4, tol=1e-10, seed=0):
    """Estimate of the condition number. The estimate is the product of the
    1-norm of the matrix and the growth factor of inverse iteration.

    Parameters
    ----------
    system: sdlab.problem.base.LinearSystem
        Linear system
    steps: int, optional
        Number of inverse iteration steps
    tol: float, optional
        Tolerance for the solves
    seed: int, optional
        Seed for the random start vector

    Returns
    -------
    float
    """
    growth = inverse_growth(system, steps=steps, tol=tol, seed=seed)
    return float(norm(system.matrix, 1) * growth)


def inverse_growth(system, steps=4, tol=1e-10, seed=0):
    """Growth factor ||A^-1 x|| / ||x|| after a few steps of inverse iteration
    from a random start vector. The result approximates the norm of the
    inverse matrix.

    Parameters
    ----------
    system: sdlab.problem.base.LinearSystem
        Linear system
    steps: int, optional
        Number of inverse iteration steps
    tol: float, optional
        Tolerance for the solves
    seed: int, optional
        Seed for the random start vector

    Returns
    -------
    float
    """
    check_system(system)
    M = build_preconditioner(system.matrix)
    rng = np.random.RandomState(seed)
    x = rng.standard_normal(system.size())
    x /= np.linalg.norm(x)
    growth = 0.0
    for _ in range(steps):
        y, _ = linear_solve(system.with_rhs(x), tol=tol, preconditioner=M)
        growth = np.linalg.norm(y.values)
        x = y.values / growth
    return float(growth)


def linear_solve(
    system, tol=1e-8, method=METHOD_GMRES, x0=None, preconditioner=None,
    maxiter=MAX_ITERATIONS
):
    """Solve the linear system with a preconditioned Krylov method.

    The solver computes a correction to the initial guess x0 (default 0). If
    the true relative residual exceeds the tolerance after the Krylov solve the
    correction step is repeated up to MAX_REFINEMENTS times. For a zero
    right-hand side the residual is measured relative to the initial
    residual.

    Parameters
    ----------
    system: sdlab.problem.base.LinearSystem
        Linear system
    tol: float, optional
        Relative residual tolerance in (0, 1e-2]
    method: string, optional
        Krylov method (gmres or bicgstab)
    x0: numpy.ndarray, optional
        Initial guess
    preconditioner: scipy.sparse.linalg.LinearOperator, optional
        Preconditioner. An incomplete LU factorization is computed if not
        given.
    maxiter: int, optional
        Iteration cap for each Krylov solve

    Returns
    -------
    (sdlab.discretization.field.DiscreteField, sdlab.solver.report.SolveReport)

    Raises
    ------
    sdlab.error.SolverError
    """
    if not (0 < tol <= MAX_TOLERANCE):
        raise SolverError('tolerance must be in (0, {}]'.format(MAX_TOLERANCE))
    if not method in METHODS:
        raise SolverError('unknown method \'{}\''.format(method))
    check_system(system)
    A = system.matrix
    b = system.rhs
    grid = system.grid
    x = np.zeros(b.shape[0]) if x0 is None else np.array(x0, dtype=float)
    residual = b - A.dot(x)
    reference = np.linalg.norm(b)
    if reference == 0:
        reference = np.linalg.norm(residual)
    if reference == 0:
        return DiscreteField(grid, x), SolveReport(
            iterations=0,
            final_residual=0.0,
            converged=True,
            method=method
        )
    if preconditioner is None:
        preconditioner = build_preconditioner(A)
    counter = [0]

    def callback(arg):
        counter[0] += 1

    atol = tol * reference
    messages = list()
    for _ in range(MAX_REFINEMENTS + 1):
        if method == METHOD_GMRES:
            delta, info = gmres(
                A,
                residual,
                rtol=0.0,
                atol=atol,
                restart=GMRES_RESTART,
                maxiter=max(1, maxiter // GMRES_RESTART),
                M=preconditioner,
                callback=callback,
                callback_type='pr_norm'
            )
        else:
            delta, info = bicgstab(
                A,
                residual,
                rtol=0.0,
                atol=atol,
                maxiter=maxiter,
                M=preconditioner,
                callback=callback
            )
        x = x + delta
        residual = b - A.dot(x)
        if info < 0:
            messages.append('illegal input or breakdown ({})'.format(info))
            break
        if np.linalg.norm(residual) <= atol:
            break
        if info > 0:
            messages.append('iteration cap reached')
            break
    final_residual = float(np.linalg.norm(residual) / reference)
    converged = final_residual <= tol
    if not converged:
        logger.warning(
            '%s did not converge (residual %g > %g)',
            method,
            final_residual,
            tol
        )
    else:
        logger.debug(
            '%s converged in %d iterations (residual %g)',
            method,
            counter[0],
            final_residual
        )
    return DiscreteField(grid, x), SolveReport(
        iterations=counter[0],
        final_residual=final_residual,
        converged=converged,
        method=method,
        messages=messages
    )
