# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Exceptions that are raised by the various components of the singular drift
laboratory.
"""


class LabError(Exception):
    """Base exception indicating that a component of the laboratory
    encountered an error situation.
    """
    def __init__(self, message):
        """Initialize error message.

        Parameters
        ----------
        message : string
            Error message
        """
        Exception.__init__(self)
        self.message = message

    def __str__(self):
        """Get printable representation of the exception.

        Returns
        -------
        string
        """
        return self.message


# ------------------------------------------------------------------------------
# Grids and discrete fields
# ------------------------------------------------------------------------------

class InvalidGridError(LabError):
    """Exception indicating that the parameters for a grid violate the
    constraints of the polar discretization.
    """
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(InvalidGridError, self).__init__(message=message)


class GridMismatchError(LabError):
    """Exception indicating that a nodal array does not live on the grid it is
    combined with.
    """
    def __init__(self, expected, actual):
        """Initialize error message for the expected and the actual number of
        nodal values.

        Parameters
        ----------
        expected: int
            Number of nodes in the grid
        actual: int
            Number of values that were given
        """
        super(GridMismatchError, self).__init__(
            message='expected {} nodal values but got {}'.format(
                expected,
                actual
            )
        )


# ------------------------------------------------------------------------------
# Drift fields and analytic profiles
# ------------------------------------------------------------------------------

class InvalidDriftError(LabError):
    """Exception indicating an invalid drift specification or an evaluation
    that is undefined for the given specification.
    """
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(InvalidDriftError, self).__init__(message=message)


class InvalidProfileError(LabError):
    """Exception indicating that an analytic profile declaration is invalid or
    references an unknown profile.
    """
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(InvalidProfileError, self).__init__(message=message)


class UnknownProfileError(InvalidProfileError):
    """Exception indicating that a profile identifier is not in the catalog."""
    def __init__(self, identifier):
        """Initialize error message for unknown profile identifier.

        Parameters
        ----------
        identifier: string
            Profile identifier
        """
        super(UnknownProfileError, self).__init__(
            message='unknown profile \'{}\''.format(identifier)
        )


# ------------------------------------------------------------------------------
# Problems, assembly and solvers
# ------------------------------------------------------------------------------

class InvalidProblemError(LabError):
    """Exception indicating that a problem specification is invalid or does not
    match the pipeline it is given to.
    """
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(InvalidProblemError, self).__init__(message=message)


class AssemblyError(LabError):
    """Exception indicating that a linear system cannot be assembled for a
    given problem.
    """
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(AssemblyError, self).__init__(message=message)


class UnknownSchemeError(AssemblyError):
    """Exception indicating an unknown discretization scheme for the drift
    term.
    """
    def __init__(self, scheme):
        """Initialize error message for unknown scheme identifier.

        Parameters
        ----------
        scheme: string
            Scheme identifier
        """
        super(UnknownSchemeError, self).__init__(
            message='unknown scheme \'{}\''.format(scheme)
        )


class SolverError(LabError):
    """Exception indicating that a linear system cannot be handed to the
    iterative solver.
    """
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(SolverError, self).__init__(message=message)


# ------------------------------------------------------------------------------
# Analysis
# ------------------------------------------------------------------------------

class AnalysisError(LabError):
    """Exception indicating that a measurement or an oracle is undefined for
    the given input.
    """
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(AnalysisError, self).__init__(message=message)


# ------------------------------------------------------------------------------
# Experiments
# ------------------------------------------------------------------------------

class InvalidConfigError(LabError):
    """Exception indicating that an experiment configuration is invalid."""
    def __init__(self, message):
        """Initialize the error message.

        Parameters
        ----------
        message: string
            Error message
        """
        super(InvalidConfigError, self).__init__(message=message)


class AcceptanceError(LabError):
    """Exception indicating that one or more acceptance checks failed."""
    def __init__(self, failed):
        """Initialize error message from the list of failed check names.

        Parameters
        ----------
        failed: list(string)
            Names of the failed checks
        """
        super(AcceptanceError, self).__init__(
            message='failed checks: {}'.format(', '.join(failed))
        )
        self.failed = failed
