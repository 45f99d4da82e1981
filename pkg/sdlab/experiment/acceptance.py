# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Acceptance suite. The suite is a fixed list of experiment configurations
that cover the properties of the laboratory: manufactured convergence of
both schemes, uniqueness for alpha >= 0, the kernel for alpha < 0, pinning,
the quadratic form law, energy stability, oscillation decay, epsilon
continuation, and drift norms. Each run computes its own checks. The suite
passes if all checks of all runs pass.
"""

import logging
import os

from concurrent.futures import ProcessPoolExecutor

from sdlab.error import AcceptanceError
from sdlab.experiment.config import ExperimentConfig
from sdlab.experiment.record import RunRecord
from sdlab.experiment.runner import run_task
from sdlab.problem.base import SCHEMES

import sdlab.experiment.config as cfg


logger = logging.getLogger(__name__)


"""Default output directory for the acceptance suite."""
DEFAULT_OUTPUT_DIR = os.path.join('results', 'verify')


def acceptance_configs():
    """List of experiment configurations in the acceptance suite. Parameters
    that are not set explicitly use the suite defaults.

    Returns
    -------
    list(sdlab.experiment.config.ExperimentConfig)
    """
    docs = list()
    for scheme in SCHEMES:
        for alpha in [0.0, 1.0, 2.0]:
            docs.append({
                cfg.LABEL_NAME: 'convergence-{}-alpha-{}'.format(scheme, alpha),
                cfg.LABEL_SUITE: cfg.SUITE_CONVERGENCE,
                cfg.LABEL_ALPHA: alpha,
                cfg.LABEL_SCHEME: scheme
            })
    docs.append({
        cfg.LABEL_NAME: 'uniqueness',
        cfg.LABEL_SUITE: cfg.SUITE_UNIQUENESS,
        cfg.LABEL_TOL: 1e-8
    })
    for suite in [
        cfg.SUITE_NONUNIQUENESS,
        cfg.SUITE_PINNING_EQUIVALENCE,
        cfg.SUITE_QUADRATIC_FORM,
        cfg.SUITE_ENERGY_STABILITY,
        cfg.SUITE_OSCILLATION,
        cfg.SUITE_EPSILON_CONTINUATION,
        cfg.SUITE_DRIFT_NORMS
    ]:
        docs.append({cfg.LABEL_NAME: suite.replace('_', '-'), cfg.LABEL_SUITE: suite})
    return [ExperimentConfig(doc) for doc in docs]


def verify(output_dir=None, threads=1, tol=None):
    """Run the acceptance suite.

    Parameters
    ----------
    output_dir: string, optional
        Base output directory. Each run writes to a sub-folder named after
        the experiment.
    threads: int, optional
        Number of worker processes
    tol: float, optional
        Overrides the tolerance of all configurations

    Returns
    -------
    list(sdlab.experiment.record.RunRecord)

    Raises
    ------
    sdlab.error.AcceptanceError
    """
    if output_dir is None:
        output_dir = DEFAULT_OUTPUT_DIR
    tasks = [
        (c.to_dict(), os.path.join(output_dir, c.name), tol)
        for c in acceptance_configs()
    ]
    if threads <= 1:
        docs = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            docs = list(executor.map(run_task, tasks))
    records = [RunRecord.from_dict(doc) for doc in docs]
    failed = failed_checks(records)
    for record in records:
        logger.info(
            '%s: %s',
            record.config[cfg.LABEL_NAME],
            'failed' if record.failed_checks() else 'passed'
        )
    if len(failed) > 0:
        raise AcceptanceError(failed)
    return records


def failed_checks(records):
    """Qualified names (experiment:check) of all failed checks.

    Parameters
    ----------
    records: list(sdlab.experiment.record.RunRecord)
        Run records

    Returns
    -------
    list(string)
    """
    failed = list()
    for record in records:
        name = record.config[cfg.LABEL_NAME]
        for check in record.failed_checks():
            failed.append('{}:{}'.format(name, check))
    return failed
