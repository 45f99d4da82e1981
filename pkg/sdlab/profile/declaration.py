# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Specification for analytic profile declarations. Analytic profiles are the
closed-form functions that are used as exact solutions, sources, vector
sources, and stream functions. A profile is declared by a dictionary that
contains the profile identifier and the profile parameters, e.g.,

    {'id': 'annulus_bump', 'center': 0.5, 'width': 0.1}

This module defines the JSON schema for profile declarations and helper
methods to create declarations from within Python scripts.
"""

from jsonschema import validate, ValidationError

from sdlab.error import InvalidProfileError, UnknownProfileError


# ------------------------------------------------------------------------------
# Schema
# ------------------------------------------------------------------------------

"""Labels for elements in the schema of a profile declaration."""
LABEL_AMPLITUDE = 'amplitude'
LABEL_CENTER = 'center'
LABEL_EXPONENT = 'exponent'
LABEL_ID = 'id'
LABEL_SIGMA = 'sigma'
LABEL_VALUE = 'value'
LABEL_WIDTH = 'width'
LABEL_X0 = 'x0'
LABEL_Y0 = 'y0'


PROFILE_SCHEMA = {
    'type': 'object',
    'properties': {
        LABEL_ID: {'type': 'string'},
        LABEL_AMPLITUDE: {'type': 'number'},
        LABEL_CENTER: {'type': 'number', 'minimum': 0},
        LABEL_EXPONENT: {'type': 'number', 'minimum': 0},
        LABEL_SIGMA: {'type': 'number', 'exclusiveMinimum': 0},
        LABEL_VALUE: {'type': 'number'},
        LABEL_WIDTH: {'type': 'number', 'exclusiveMinimum': 0},
        LABEL_X0: {'type': 'number'},
        LABEL_Y0: {'type': 'number'}
    },
    'required': [LABEL_ID],
    'additionalProperties': False
}


# ------------------------------------------------------------------------------
# Profile identifier
# ------------------------------------------------------------------------------

"""Exact solutions with closed-form derivatives."""
ONE_MINUS_R2 = 'one_minus_r2'
ONE_MINUS_R2_SQUARED = 'one_minus_r2_squared'
R2_ONE_MINUS_R = 'r2_one_minus_r'
KERNEL_WEIGHTED = 'kernel_weighted'

"""Scalar sources."""
ANNULUS_BUMP = 'annulus_bump'
CONSTANT = 'constant'
GAUSSIAN_BLOB = 'gaussian_blob'

"""Vector sources f for the right-hand side -div f."""
ANNULUS_FLUX = 'annulus_flux'
RADIAL_FLUX = 'radial_flux'

"""Stream functions of divergence-free drift fields."""
DIPOLE = 'dipole'
VORTEX = 'vortex'


SOLUTION_PROFILES = [
    ONE_MINUS_R2,
    ONE_MINUS_R2_SQUARED,
    R2_ONE_MINUS_R,
    KERNEL_WEIGHTED
]

SOURCE_PROFILES = [ANNULUS_BUMP, CONSTANT, GAUSSIAN_BLOB]

VECTOR_PROFILES = [ANNULUS_FLUX, RADIAL_FLUX]

STREAM_PROFILES = [DIPOLE, VORTEX]

PROFILES = SOLUTION_PROFILES + SOURCE_PROFILES + VECTOR_PROFILES + STREAM_PROFILES


"""Parameters that are accepted by each profile."""
PROFILE_PARAMETERS = {
    ONE_MINUS_R2: [LABEL_AMPLITUDE],
    ONE_MINUS_R2_SQUARED: [LABEL_AMPLITUDE],
    R2_ONE_MINUS_R: [LABEL_AMPLITUDE],
    KERNEL_WEIGHTED: [LABEL_AMPLITUDE, LABEL_EXPONENT],
    ANNULUS_BUMP: [LABEL_AMPLITUDE, LABEL_CENTER, LABEL_WIDTH],
    CONSTANT: [LABEL_VALUE],
    GAUSSIAN_BLOB: [LABEL_AMPLITUDE, LABEL_SIGMA, LABEL_X0, LABEL_Y0],
    ANNULUS_FLUX: [LABEL_AMPLITUDE, LABEL_CENTER, LABEL_WIDTH],
    RADIAL_FLUX: [LABEL_AMPLITUDE],
    DIPOLE: [LABEL_AMPLITUDE],
    VORTEX: [LABEL_AMPLITUDE, LABEL_SIGMA]
}


# ------------------------------------------------------------------------------
# Helper Methods
# ------------------------------------------------------------------------------

def profile_declaration(identifier, **kwargs):
    """Create a dictionary that contains a profile declaration. Parameters
    with value None are omitted.

    Parameters
    ----------
    identifier: string
        Profile identifier
    kwargs: dict
        Profile parameters

    Returns
    -------
    dict

    Raises
    ------
    sdlab.error.InvalidProfileError
    """
    if identifier is None:
        raise InvalidProfileError('missing identifier')
    doc = {LABEL_ID: identifier}
    for key, value in kwargs.items():
        if not value is None:
            doc[key] = value
    validate_profile(doc)
    return doc


def validate_profile(doc):
    """Validate the given profile declaration against the schema. Also ensures
    that the identifier references a known profile and that only parameters of
    that profile are given.

    Parameters
    ----------
    doc: dict
        Profile declaration

    Raises
    ------
    sdlab.error.InvalidProfileError
    """
    try:
        validate(instance=doc, schema=PROFILE_SCHEMA)
    except ValidationError as ex:
        raise InvalidProfileError(str(ex.message))
    identifier = doc[LABEL_ID]
    if not identifier in PROFILE_PARAMETERS:
        raise UnknownProfileError(identifier)
    for key in doc:
        if key != LABEL_ID and not key in PROFILE_PARAMETERS[identifier]:
            raise InvalidProfileError(
                'invalid parameter \'{}\' for profile \'{}\''.format(
                    key,
                    identifier
                )
            )
