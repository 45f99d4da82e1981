# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Collection of helper methods for analytic profiles."""

from sdlab.error import InvalidProfileError

import sdlab.profile.base as pb
import sdlab.profile.declaration as pd


"""Profile classes for all identifiers in the catalog."""
PROFILE_CLASSES = {
    pd.ONE_MINUS_R2: pb.OneMinusR2,
    pd.ONE_MINUS_R2_SQUARED: pb.OneMinusR2Squared,
    pd.R2_ONE_MINUS_R: pb.R2OneMinusR,
    pd.KERNEL_WEIGHTED: pb.KernelWeighted,
    pd.ANNULUS_BUMP: pb.AnnulusBump,
    pd.CONSTANT: pb.ConstantProfile,
    pd.GAUSSIAN_BLOB: pb.GaussianBlob,
    pd.ANNULUS_FLUX: pb.AnnulusFlux,
    pd.RADIAL_FLUX: pb.RadialFlux,
    pd.DIPOLE: pb.Dipole,
    pd.VORTEX: pb.Vortex
}


def create_profile(doc, validate=True, kinds=None):
    """Create an instance of the analytic profile that is declared by the given
    dictionary. A plain string is accepted as the declaration of a profile with
    default parameters.

    Parameters
    ----------
    doc: dict or string
        Profile declaration or profile identifier
    validate: bool, optional
        Validate the declaration against the schema if True
    kinds: list(string), optional
        List of admissible profile identifiers

    Returns
    -------
    sdlab.profile.base.Profile

    Raises
    ------
    sdlab.error.InvalidProfileError
    """
    if isinstance(doc, str):
        doc = {pd.LABEL_ID: doc}
    if validate:
        pd.validate_profile(doc)
    identifier = doc.get(pd.LABEL_ID)
    if not kinds is None and not identifier in kinds:
        raise InvalidProfileError(
            'profile \'{}\' not allowed here (expected one of {})'.format(
                identifier,
                ', '.join(kinds)
            )
        )
    return PROFILE_CLASSES[identifier](doc)
