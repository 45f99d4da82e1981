# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Run experiments and persist their results. Each run writes three artifacts
to the output directory: the result table as CSV, the run record as JSON, and
(for suites that have one) a log-log plot as SVG. All artifact names start
with the experiment name.

A directory of configuration files is run as a suite. Configurations are run
in sorted order of their file names. Multiple configurations may be run in
parallel worker processes.
"""

import csv
import glob
import logging
import os
import time

from concurrent.futures import ProcessPoolExecutor

from sdlab.error import InvalidConfigError
from sdlab.experiment.config import ExperimentConfig, LABEL_PLOT, LABEL_TOL, load_config
from sdlab.experiment.plot import plot_record
from sdlab.experiment.record import RunRecord
from sdlab.experiment.suite import SUITE_RUNNERS
from sdlab.util.core import create_dir, write_object


logger = logging.getLogger(__name__)


"""Types of run artifacts."""
ARTIFACT_PLOT = 'plot'
ARTIFACT_RECORD = 'record'
ARTIFACT_TABLE = 'table'

"""File suffixes of configuration files."""
CONFIG_SUFFIXES = ['.json', '.yml', '.yaml']

"""Default base directory for run outputs."""
DEFAULT_OUTPUT_DIR = 'results'


def run(config, output_dir=None, tol=None):
    """Run a single experiment and write all artifacts. The output directory
    is (in order of precedence) the given directory, the directory in the
    configuration, or a directory named after the experiment under the
    default output directory.

    Parameters
    ----------
    config: sdlab.experiment.config.ExperimentConfig
        Experiment configuration
    output_dir: string, optional
        Output directory
    tol: float, optional
        Overrides the tolerance in the configuration

    Returns
    -------
    sdlab.experiment.record.RunRecord

    Raises
    ------
    sdlab.error.InvalidConfigError
    """
    config = config.replace(**{LABEL_TOL: tol})
    if output_dir is None:
        output_dir = config.output_dir
    if output_dir is None:
        output_dir = os.path.join(DEFAULT_OUTPUT_DIR, config.name)
    try:
        create_dir(output_dir)
    except OSError as ex:
        raise InvalidConfigError(
            'cannot create output directory \'{}\': {}'.format(output_dir, ex)
        )
    logger.info('run \'%s\' (suite %s)', config.name, config.suite)
    start = time.perf_counter()
    record = SUITE_RUNNERS[config.suite](config)
    record.elapsed_ms = (time.perf_counter() - start) * 1000.0
    prefix = os.path.join(output_dir, config.name)
    table_file = prefix + '.csv'
    emit_table(record, table_file)
    record.artifacts[ARTIFACT_TABLE] = table_file
    if config.get(LABEL_PLOT):
        plot_file = plot_record(record, config.suite, prefix + '.svg')
        if not plot_file is None:
            record.artifacts[ARTIFACT_PLOT] = plot_file
    record_file = prefix + '.json'
    record.artifacts[ARTIFACT_RECORD] = record_file
    write_object(record_file, record.to_dict())
    failed = record.failed_checks()
    if len(failed) > 0:
        logger.warning('run \'%s\' failed checks: %s', config.name, ', '.join(failed))
    logger.info('run \'%s\' finished in %.1f ms', config.name, record.elapsed_ms)
    return record


def run_suite_dir(directory, threads=1, tol=None, output_dir=None):
    """Run all experiment configurations in a directory.

    Parameters
    ----------
    directory: string
        Directory containing configuration files
    threads: int, optional
        Number of worker processes
    tol: float, optional
        Overrides the tolerance of all configurations
    output_dir: string, optional
        Base output directory. Each run writes to a sub-folder named after
        the experiment.

    Returns
    -------
    list(sdlab.experiment.record.RunRecord)

    Raises
    ------
    sdlab.error.InvalidConfigError
    """
    if not os.path.isdir(directory):
        raise InvalidConfigError('\'{}\' is not a directory'.format(directory))
    configs = [load_config(f) for f in config_files(directory)]
    if len(configs) == 0:
        raise InvalidConfigError('no configuration files in \'{}\''.format(directory))
    tasks = list()
    for config in configs:
        target = None
        if not output_dir is None:
            target = os.path.join(output_dir, config.name)
        tasks.append((config.to_dict(), target, tol))
    if threads <= 1:
        docs = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            docs = list(executor.map(run_task, tasks))
    return [RunRecord.from_dict(doc) for doc in docs]


# ------------------------------------------------------------------------------
# Helper Methods
# ------------------------------------------------------------------------------

def config_files(directory):
    """Sorted list of configuration files in a directory.

    Parameters
    ----------
    directory: string
        Path to directory

    Returns
    -------
    list(string)
    """
    files = list()
    for suffix in CONFIG_SUFFIXES:
        files.extend(glob.glob(os.path.join(directory, '*' + suffix)))
    return sorted(files)


def emit_table(record, filename):
    """Write the result table of a run record as CSV. Floats are written with
    full precision and missing values as empty cells.

    Parameters
    ----------
    record: sdlab.experiment.record.RunRecord
        Run record
    filename: string
        Path to output file
    """
    with open(filename, 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(record.columns)
        for row in record.rows:
            writer.writerow([format_cell(value) for value in row])


def format_cell(value):
    """String representation of a table cell."""
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def run_task(task):
    """Run a configuration in a worker process. Tasks and results are plain
    dictionaries.

    Parameters
    ----------
    task: (dict, string, float)
        Configuration dictionary, output directory, and tolerance

    Returns
    -------
    dict
    """
    doc, output_dir, tol = task
    return run(ExperimentConfig(doc), output_dir=output_dir, tol=tol).to_dict()
