# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Experiment configurations. A configuration is a JSON (or YAML) object that
names the experiment, selects one of the experiment suites, and sets the
suite parameters. Parameters that are not given are filled in from the suite
defaults.

Example
-------

    {
        "name": "convergence-alpha-1",
        "suite": "convergence",
        "alpha": 1.0,
        "grids": [[32, 64], [64, 128], [128, 256]],
        "scheme": "centered",
        "tol": 1e-10
    }
"""

import copy
import os

from jsonschema import validate, ValidationError

from sdlab.error import InvalidConfigError
from sdlab.problem.base import SCHEMES, SCHEME_CENTERED
from sdlab.solver.linear import MAX_TOLERANCE
from sdlab.util.core import read_object

import sdlab.profile.declaration as pd


# ------------------------------------------------------------------------------
# Suites
# ------------------------------------------------------------------------------

"""Identifier for experiment suites."""
SUITE_CONVERGENCE = 'convergence'
SUITE_DRIFT_NORMS = 'drift_norms'
SUITE_ENERGY_STABILITY = 'energy_stability'
SUITE_EPSILON_CONTINUATION = 'epsilon_continuation'
SUITE_NONUNIQUENESS = 'nonuniqueness'
SUITE_OSCILLATION = 'oscillation'
SUITE_PINNING_EQUIVALENCE = 'pinning_equivalence'
SUITE_QUADRATIC_FORM = 'quadratic_form'
SUITE_UNIQUENESS = 'uniqueness'

SUITES = [
    SUITE_CONVERGENCE,
    SUITE_DRIFT_NORMS,
    SUITE_ENERGY_STABILITY,
    SUITE_EPSILON_CONTINUATION,
    SUITE_NONUNIQUENESS,
    SUITE_OSCILLATION,
    SUITE_PINNING_EQUIVALENCE,
    SUITE_QUADRATIC_FORM,
    SUITE_UNIQUENESS
]


# ------------------------------------------------------------------------------
# Schema
# ------------------------------------------------------------------------------

"""Labels for elements in the experiment configuration."""
LABEL_ALPHA = 'alpha'
LABEL_ALPHAS = 'alphas'
LABEL_BETA = 'beta'
LABEL_BETAS = 'betas'
LABEL_CONDITION = 'condition'
LABEL_EPSILON = 'epsilon'
LABEL_EPSILONS = 'epsilons'
LABEL_ETA = 'eta'
LABEL_ETAS = 'etas'
LABEL_GRIDS = 'grids'
LABEL_NAME = 'name'
LABEL_OUTPUT_DIR = 'outputDir'
LABEL_PLOT = 'plot'
LABEL_PROFILES = 'profiles'
LABEL_Q = 'q'
LABEL_SCHEME = 'scheme'
LABEL_SEED = 'seed'
LABEL_SOLUTION = 'solution'
LABEL_SOURCE = 'source'
LABEL_SOURCES = 'sources'
LABEL_SUITE = 'suite'
LABEL_TOL = 'tol'


PROFILE_REF = {'oneOf': [{'type': 'string'}, {'type': 'object'}]}

NUMBER_LIST = {'type': 'array', 'items': {'type': 'number'}}


CONFIG_SCHEMA = {
    'type': 'object',
    'properties': {
        LABEL_NAME: {'type': 'string', 'minLength': 1},
        LABEL_SUITE: {'type': 'string', 'enum': SUITES},
        LABEL_ALPHA: {'type': 'number'},
        LABEL_ALPHAS: NUMBER_LIST,
        LABEL_BETA: {'type': 'number'},
        LABEL_BETAS: NUMBER_LIST,
        LABEL_CONDITION: {'type': 'boolean'},
        LABEL_EPSILON: {'type': 'number', 'minimum': 0},
        LABEL_EPSILONS: NUMBER_LIST,
        LABEL_ETA: {'type': 'number'},
        LABEL_ETAS: NUMBER_LIST,
        LABEL_GRIDS: {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'array',
                'minItems': 2,
                'maxItems': 2,
                'items': {'type': 'integer', 'minimum': 1}
            }
        },
        LABEL_OUTPUT_DIR: {'type': 'string'},
        LABEL_PLOT: {'type': 'boolean'},
        LABEL_PROFILES: {'type': 'array', 'items': PROFILE_REF},
        LABEL_Q: {'type': 'number'},
        LABEL_SCHEME: {'type': 'string', 'enum': SCHEMES},
        LABEL_SEED: {'type': 'integer'},
        LABEL_SOLUTION: PROFILE_REF,
        LABEL_SOURCE: PROFILE_REF,
        LABEL_SOURCES: {'type': 'integer', 'minimum': 1},
        LABEL_TOL: {'type': 'number'}
    },
    'required': [LABEL_NAME, LABEL_SUITE],
    'additionalProperties': False
}


"""Default values that apply to all suites."""
DEFAULTS = {
    LABEL_SCHEME: SCHEME_CENTERED,
    LABEL_TOL: 1e-8,
    LABEL_Q: 4.0,
    LABEL_SEED: 0,
    LABEL_PLOT: True
}

DEFAULT_GRIDS = [[32, 64], [64, 128], [128, 256]]

ANNULUS_SOURCE = pd.profile_declaration(pd.ANNULUS_BUMP, center=0.5, width=0.1)


"""Suite specific default values."""
SUITE_DEFAULTS = {
    SUITE_CONVERGENCE: {
        LABEL_ALPHA: 1.0,
        LABEL_BETA: 0.0,
        LABEL_GRIDS: DEFAULT_GRIDS,
        LABEL_SOLUTION: pd.R2_ONE_MINUS_R
    },
    SUITE_DRIFT_NORMS: {
        LABEL_ALPHA: 1.0,
        LABEL_BETA: 1.0,
        LABEL_GRIDS: [[256, 512]],
        LABEL_ETAS: [0.2, 0.1, 0.05]
    },
    SUITE_ENERGY_STABILITY: {
        LABEL_ALPHA: 1.0,
        LABEL_BETAS: [0.0, 0.1, 0.2],
        LABEL_GRIDS: [[64, 128], [128, 256]],
        LABEL_SOLUTION: pd.ONE_MINUS_R2,
        LABEL_SOURCES: 5
    },
    SUITE_EPSILON_CONTINUATION: {
        LABEL_ALPHA: 1.0,
        LABEL_BETA: 0.0,
        LABEL_EPSILONS: [1e-1, 1e-2, 1e-3, 1e-4],
        LABEL_GRIDS: [[64, 128]],
        LABEL_SOLUTION: pd.ONE_MINUS_R2
    },
    SUITE_NONUNIQUENESS: {
        LABEL_ALPHA: -0.5,
        LABEL_CONDITION: False,
        LABEL_GRIDS: DEFAULT_GRIDS
    },
    SUITE_OSCILLATION: {
        LABEL_ALPHA: -0.5,
        LABEL_GRIDS: [[128, 256]],
        LABEL_SOURCE: ANNULUS_SOURCE
    },
    SUITE_PINNING_EQUIVALENCE: {
        LABEL_ALPHA: -0.5,
        LABEL_BETA: 0.0,
        LABEL_GRIDS: [[32, 64], [64, 128]],
        LABEL_SOURCE: ANNULUS_SOURCE
    },
    SUITE_QUADRATIC_FORM: {
        LABEL_ALPHAS: [1.0, -1.0],
        LABEL_GRIDS: [[64, 128], [128, 256]],
        LABEL_PROFILES: [pd.ONE_MINUS_R2, pd.ONE_MINUS_R2_SQUARED]
    },
    SUITE_UNIQUENESS: {
        LABEL_ALPHAS: [0.5, 2.0],
        LABEL_BETAS: [0.0, 0.2],
        LABEL_GRIDS: [[32, 64], [64, 128]]
    }
}


# ------------------------------------------------------------------------------
# Configuration object
# ------------------------------------------------------------------------------

class ExperimentConfig(object):
    """Configuration of a single experiment. The configuration keeps the
    complete dictionary (with defaults filled in) and exposes the common
    parameters as attributes. Suite specific parameters are accessed with
    get().
    """
    def __init__(self, doc, validate=True):
        """Initialize the configuration from its dictionary representation.

        Parameters
        ----------
        doc: dict
            Configuration dictionary
        validate: bool, optional
            Validate the dictionary against the schema if True

        Raises
        ------
        sdlab.error.InvalidConfigError
        """
        if validate:
            validate_config(doc)
        self.doc = set_defaults(doc)
        if validate:
            validate_parameters(self.doc)
        self.name = self.doc[LABEL_NAME]
        self.suite = self.doc[LABEL_SUITE]
        self.grids = [tuple(g) for g in self.doc[LABEL_GRIDS]]
        self.scheme = self.doc[LABEL_SCHEME]
        self.tol = float(self.doc[LABEL_TOL])
        self.q = float(self.doc[LABEL_Q])
        self.seed = int(self.doc[LABEL_SEED])
        self.output_dir = self.doc.get(LABEL_OUTPUT_DIR)

    @staticmethod
    def from_dict(doc, validate=True):
        """Get configuration from its dictionary representation.

        Parameters
        ----------
        doc: dict
            Configuration dictionary
        validate: bool, optional
            Validate the dictionary if True

        Returns
        -------
        sdlab.experiment.config.ExperimentConfig
        """
        return ExperimentConfig(doc, validate=validate)

    def get(self, label, default=None):
        """Value of a configuration parameter.

        Parameters
        ----------
        label: string
            Parameter label
        default: any, optional
            Value if the parameter is not set

        Returns
        -------
        any
        """
        return self.doc.get(label, default)

    def replace(self, **kwargs):
        """Copy of the configuration with the given parameters (by label)
        replaced. Parameters with value None are ignored.

        Parameters
        ----------
        kwargs: dict
            Replaced parameters

        Returns
        -------
        sdlab.experiment.config.ExperimentConfig
        """
        doc = copy.deepcopy(self.doc)
        for key, value in kwargs.items():
            if not value is None:
                doc[key] = value
        return ExperimentConfig(doc)

    def to_dict(self):
        """Get dictionary serialization of the configuration.

        Returns
        -------
        dict
        """
        return copy.deepcopy(self.doc)


# ------------------------------------------------------------------------------
# Helper Methods
# ------------------------------------------------------------------------------

def load_config(filename):
    """Read experiment configuration from a JSON or YAML file. The name of the
    file (without suffix) is used as the experiment name if the file does not
    contain one.

    Parameters
    ----------
    filename: string
        Path to configuration file

    Returns
    -------
    sdlab.experiment.config.ExperimentConfig

    Raises
    ------
    sdlab.error.InvalidConfigError
    """
    try:
        doc = read_object(filename)
    except (IOError, OSError, ValueError) as ex:
        raise InvalidConfigError('cannot read \'{}\': {}'.format(filename, ex))
    if not isinstance(doc, dict):
        raise InvalidConfigError('\'{}\' does not contain an object'.format(filename))
    if not LABEL_NAME in doc:
        doc[LABEL_NAME] = os.path.splitext(os.path.basename(filename))[0]
    return ExperimentConfig(doc)


def set_defaults(doc):
    """Copy of the configuration dictionary with default values for all
    parameters that are not set.

    Parameters
    ----------
    doc: dict
        Configuration dictionary

    Returns
    -------
    dict
    """
    result = copy.deepcopy(DEFAULTS)
    result.update(copy.deepcopy(SUITE_DEFAULTS.get(doc.get(LABEL_SUITE), dict())))
    result.update(copy.deepcopy(doc))
    return result


def validate_config(doc):
    """Validate the configuration dictionary against the schema.

    Parameters
    ----------
    doc: dict
        Configuration dictionary

    Raises
    ------
    sdlab.error.InvalidConfigError
    """
    try:
        validate(doc, schema=CONFIG_SCHEMA)
    except ValidationError as ex:
        raise InvalidConfigError(ex.message)


def validate_parameters(doc):
    """Validate suite specific parameter combinations of a configuration with
    defaults filled in.

    Parameters
    ----------
    doc: dict
        Configuration dictionary

    Raises
    ------
    sdlab.error.InvalidConfigError
    """
    suite = doc[LABEL_SUITE]
    tol = doc[LABEL_TOL]
    if not 0 < tol <= MAX_TOLERANCE:
        raise InvalidConfigError('tol must be in (0, {}]'.format(MAX_TOLERANCE))
    if not doc[LABEL_Q] > 2:
        raise InvalidConfigError('q must exceed 2')
    for n_r, n_theta in doc[LABEL_GRIDS]:
        if n_r < 4 or n_theta < 8:
            raise InvalidConfigError('invalid grid ({}, {})'.format(n_r, n_theta))
    alpha = doc.get(LABEL_ALPHA)
    if suite in [SUITE_NONUNIQUENESS, SUITE_OSCILLATION, SUITE_PINNING_EQUIVALENCE]:
        if not alpha < 0:
            raise InvalidConfigError('suite \'{}\' requires alpha < 0'.format(suite))
    elif suite in [SUITE_CONVERGENCE, SUITE_ENERGY_STABILITY, SUITE_EPSILON_CONTINUATION]:
        if alpha < 0:
            raise InvalidConfigError('suite \'{}\' requires alpha >= 0'.format(suite))
    if suite == SUITE_PINNING_EQUIVALENCE and doc[LABEL_BETA] != 0:
        raise InvalidConfigError('pinning equivalence requires beta = 0')
    if suite == SUITE_UNIQUENESS and any(a < 0 for a in doc[LABEL_ALPHAS]):
        raise InvalidConfigError('uniqueness requires alpha >= 0')
    if suite == SUITE_QUADRATIC_FORM and any(a == 0 for a in doc[LABEL_ALPHAS]):
        raise InvalidConfigError('quadratic form requires alpha != 0')
    if suite == SUITE_DRIFT_NORMS and any(eta <= 0 for eta in doc[LABEL_ETAS]):
        raise InvalidConfigError('mollification radii must be positive')
    if suite == SUITE_EPSILON_CONTINUATION:
        epsilons = doc[LABEL_EPSILONS]
        if len(epsilons) < 2 or epsilons[-1] <= 0:
            raise InvalidConfigError('invalid regularization schedule')
        for e1, e2 in zip(epsilons[:-1], epsilons[1:]):
            if not e2 < e1:
                raise InvalidConfigError('regularization schedule not strictly decreasing')
    if suite in [SUITE_CONVERGENCE, SUITE_QUADRATIC_FORM] and len(doc[LABEL_GRIDS]) < 2:
        raise InvalidConfigError('suite \'{}\' requires two or more grids'.format(suite))
    if suite == SUITE_CONVERGENCE and len(doc[LABEL_GRIDS]) < 3:
        raise InvalidConfigError('convergence suite requires three or more grids')
