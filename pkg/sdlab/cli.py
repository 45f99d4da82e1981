# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Command line interface of the laboratory.

    sdlab run <config>      Run a single experiment configuration
    sdlab suite <dir>       Run all configurations in a directory
    sdlab verify            Run the acceptance suite

Exit codes are 0 on success, 2 for invalid configurations or inputs, 3 if a
solve did not converge, and 4 if acceptance checks failed.
"""

import argparse
import logging
import sys

from sdlab.error import AcceptanceError, LabError, SolverError
from sdlab.experiment.acceptance import verify
from sdlab.experiment.config import load_config
from sdlab.experiment.runner import run, run_suite_dir

import sdlab


logger = logging.getLogger(__name__)


"""Exit codes."""
EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_NOT_CONVERGED = 3
EXIT_ACCEPTANCE_FAILED = 4

"""Log levels by number of verbose flags."""
LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def parse_args(argv=None):
    """Parse command line arguments.

    Parameters
    ----------
    argv: list(string), optional
        Command line arguments (default sys.argv[1:])

    Returns
    -------
    argparse.Namespace
    """
    parser = argparse.ArgumentParser(
        prog='sdlab',
        description='Numerical experiments for elliptic equations with singular drift.'
    )
    parser.add_argument('--version', action='version', version=sdlab.__version__)
    parser.add_argument(
        '-v', '--verbose',
        action='count',
        default=0,
        help='increase log output (repeatable)'
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--tol', type=float, help='solver tolerance')
    common.add_argument('--out', dest='output_dir', help='output directory')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    cmd_run = subparsers.add_parser('run', parents=[common], help='run an experiment')
    cmd_run.add_argument('config', help='experiment configuration file')
    cmd_suite = subparsers.add_parser('suite', parents=[common], help='run a directory of experiments')
    cmd_suite.add_argument('directory', help='directory of configuration files')
    cmd_suite.add_argument('--threads', type=int, default=1, help='number of worker processes')
    cmd_verify = subparsers.add_parser('verify', parents=[common], help='run the acceptance suite')
    cmd_verify.add_argument('--threads', type=int, default=1, help='number of worker processes')
    return parser.parse_args(argv)


def main(argv=None):
    """Run the command line interface. Returns the exit code.

    Parameters
    ----------
    argv: list(string), optional
        Command line arguments

    Returns
    -------
    int
    """
    args = parse_args(argv)
    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )
    try:
        if args.command == 'run':
            records = [run(load_config(args.config), output_dir=args.output_dir, tol=args.tol)]
        elif args.command == 'suite':
            records = run_suite_dir(
                args.directory,
                threads=args.threads,
                tol=args.tol,
                output_dir=args.output_dir
            )
        else:
            records = verify(output_dir=args.output_dir, threads=args.threads, tol=args.tol)
    except AcceptanceError as ex:
        print('acceptance failed: {}'.format(', '.join(ex.failed)), file=sys.stderr)
        return EXIT_ACCEPTANCE_FAILED
    except SolverError as ex:
        print('solver error: {}'.format(ex), file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except LabError as ex:
        print('error: {}'.format(ex), file=sys.stderr)
        return EXIT_CONFIG_ERROR
    for record in records:
        artifact = record.artifacts.get('record')
        print('{}\t{:.1f} ms\t{}'.format(
            record.config.get('name'),
            record.elapsed_ms,
            artifact if not artifact is None else ''
        ))
    if not all(r.is_converged() for r in records):
        print('one or more solves did not converge', file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
