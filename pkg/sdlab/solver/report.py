# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Reports for linear solves and solution pipelines."""

from sdlab.util.core import validate_doc


"""Labels for serialization."""
LABEL_CONVERGED = 'converged'
LABEL_DIAGNOSTICS = 'diagnostics'
LABEL_EPSILON_SCHEDULE = 'epsilonSchedule'
LABEL_FINAL_RESIDUAL = 'finalResidual'
LABEL_FIXED_POINT_ITERS = 'fixedPointIters'
LABEL_INCREMENTS = 'increments'
LABEL_ITERATIONS = 'iterations'
LABEL_MESSAGES = 'messages'
LABEL_METHOD = 'method'


class SolveReport(object):
    """Summary of a solve. Contains the number of Krylov iterations, the final
    relative residual, the regularization parameters that were used, the
    number of outer fixed point iterations, and the convergence flag.
    Pipelines add the increments between successive iterates, messages, and
    named diagnostic values.
    """
    def __init__(
        self, iterations, final_residual, converged, epsilon_schedule=None,
        fixed_point_iters=0, increments=None, method=None, messages=None,
        diagnostics=None
    ):
        """Initialize the report components.

        Parameters
        ----------
        iterations: int
            Total number of Krylov iterations
        final_residual: float
            Relative residual of the last linear solve
        converged: bool
            Convergence flag
        epsilon_schedule: list(float), optional
            Strictly decreasing regularization parameters
        fixed_point_iters: int, optional
            Number of outer fixed point iterations
        increments: list(float), optional
            Norms of the differences between successive iterates
        method: string, optional
            Identifier of the solver or pipeline
        messages: list(string), optional
            Diagnostic messages
        diagnostics: dict, optional
            Named diagnostic values

        Raises
        ------
        ValueError
        """
        self.iterations = int(iterations)
        self.final_residual = float(final_residual)
        self.converged = bool(converged)
        self.epsilon_schedule = [float(e) for e in epsilon_schedule] if not epsilon_schedule is None else list()
        for e1, e2 in zip(self.epsilon_schedule[:-1], self.epsilon_schedule[1:]):
            if not e2 < e1:
                raise ValueError('epsilon schedule not strictly decreasing')
        self.fixed_point_iters = int(fixed_point_iters)
        self.increments = [float(i) for i in increments] if not increments is None else list()
        self.method = method
        self.messages = list(messages) if not messages is None else list()
        self.diagnostics = dict(diagnostics) if not diagnostics is None else dict()

    @staticmethod
    def from_dict(doc):
        """Get report from its dictionary serialization.

        Parameters
        ----------
        doc: dict
            Dictionary serialization as created by to_dict()

        Returns
        -------
        sdlab.solver.report.SolveReport

        Raises
        ------
        ValueError
        """
        validate_doc(
            doc,
            mandatory_labels=[
                LABEL_ITERATIONS,
                LABEL_FINAL_RESIDUAL,
                LABEL_CONVERGED
            ],
            optional_labels=[
                LABEL_EPSILON_SCHEDULE,
                LABEL_FIXED_POINT_ITERS,
                LABEL_INCREMENTS,
                LABEL_METHOD,
                LABEL_MESSAGES,
                LABEL_DIAGNOSTICS
            ]
        )
        return SolveReport(
            iterations=doc[LABEL_ITERATIONS],
            final_residual=doc[LABEL_FINAL_RESIDUAL],
            converged=doc[LABEL_CONVERGED],
            epsilon_schedule=doc.get(LABEL_EPSILON_SCHEDULE),
            fixed_point_iters=doc.get(LABEL_FIXED_POINT_ITERS, 0),
            increments=doc.get(LABEL_INCREMENTS),
            method=doc.get(LABEL_METHOD),
            messages=doc.get(LABEL_MESSAGES),
            diagnostics=doc.get(LABEL_DIAGNOSTICS)
        )

    def to_dict(self):
        """Get dictionary serialization of the report.

        Returns
        -------
        dict
        """
        return {
            LABEL_ITERATIONS: self.iterations,
            LABEL_FINAL_RESIDUAL: self.final_residual,
            LABEL_CONVERGED: self.converged,
            LABEL_EPSILON_SCHEDULE: self.epsilon_schedule,
            LABEL_FIXED_POINT_ITERS: self.fixed_point_iters,
            LABEL_INCREMENTS: self.increments,
            LABEL_METHOD: self.method,
            LABEL_MESSAGES: self.messages,
            LABEL_DIAGNOSTICS: self.diagnostics
        }
