# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Log-log plots of experiment results. Plots are written as SVG files. The
SVG output is reproducible: element identifiers use a fixed salt and the
creation date is omitted from the file metadata.
"""

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

import numpy as np

import sdlab.experiment.config as cfg


matplotlib.rcParams['svg.hashsalt'] = 'sdlab'


def plot_convergence(record, filename):
    """Errors against mesh width with a reference slope for the fitted order.
    """
    h = np.array(record.column('h_r'), dtype=float)
    fig, ax = plt.subplots(figsize=(6, 4.5))
    for name, marker in [('error_sup', 'o-'), ('error_energy', 's--')]:
        err = np.array(record.column(name), dtype=float)
        if np.all(err > 0):
            ax.loglog(h, err, marker, linewidth=1.5, markersize=5, label=name)
    order = record.summary.get('fittedOrder')
    if not order is None:
        measure = record.summary.get('errorMeasure', 'sup')
        err = np.array(record.column('error_' + measure), dtype=float)
        h_ref = np.array([h[0], h[-1]])
        ax.loglog(
            h_ref,
            err[0] * (h_ref / h[0]) ** order,
            'k:',
            linewidth=0.8,
            label='O(h^{:.2f})'.format(order)
        )
    ax.set_xlabel('h')
    ax.set_ylabel('error')
    return save(fig, ax, record, filename)


def plot_epsilon_continuation(record, filename):
    """Energy norm increments of the continuation against epsilon."""
    eps = list()
    inc = list()
    for e, i in zip(record.column('epsilon'), record.column('increment')):
        if not i is None and i > 0:
            eps.append(e)
            inc.append(i)
    if len(inc) == 0:
        return None
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(eps, inc, 'o-', linewidth=1.5, markersize=5, label='increment')
    ax.set_xlabel('epsilon')
    ax.set_ylabel('energy norm increment')
    return save(fig, ax, record, filename)


def plot_nonuniqueness(record, filename):
    """Residual of the kernel function against mesh width."""
    h = record.column('h_r')
    res = record.column('kernel_residual')
    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(h, res, 'o-', linewidth=1.5, markersize=5, label='kernel residual')
    ax.set_xlabel('h')
    ax.set_ylabel('interior residual')
    return save(fig, ax, record, filename)


def plot_oscillation(record, filename):
    """Oscillation over B_R against R, one line per grid."""
    fig, ax = plt.subplots(figsize=(6, 4.5))
    lines = dict()
    for n_r, n_theta, R, osc in zip(
        record.column('n_r'),
        record.column('n_theta'),
        record.column('R'),
        record.column('osc')
    ):
        if osc > 0:
            lines.setdefault((n_r, n_theta), list()).append((R, osc))
    for (n_r, n_theta), points in sorted(lines.items()):
        R, osc = zip(*points)
        ax.loglog(R, osc, 'o-', linewidth=1.5, markersize=5, label='{}x{}'.format(n_r, n_theta))
    mu = record.summary.get('fittedMu')
    if not mu is None and len(lines) > 0:
        R, osc = zip(*lines[sorted(lines)[-1]])
        R_ref = np.array([R[0], R[-1]])
        ax.loglog(
            R_ref,
            osc[-1] * (R_ref / R[-1]) ** mu,
            'k:',
            linewidth=0.8,
            label='R^{:.2f}'.format(mu)
        )
    ax.set_xlabel('R')
    ax.set_ylabel('osc')
    return save(fig, ax, record, filename)


"""Plot functions by suite identifier. Suites without entry are not
plotted.
"""
PLOTS = {
    cfg.SUITE_CONVERGENCE: plot_convergence,
    cfg.SUITE_EPSILON_CONTINUATION: plot_epsilon_continuation,
    cfg.SUITE_NONUNIQUENESS: plot_nonuniqueness,
    cfg.SUITE_OSCILLATION: plot_oscillation
}


def plot_record(record, suite, filename):
    """Plot the record of a run of the given suite.

    Parameters
    ----------
    record: sdlab.experiment.record.RunRecord
        Run record
    suite: string
        Suite identifier
    filename: string
        Path to the SVG file

    Returns
    -------
    string
        Path to the written file or None if nothing was plotted
    """
    func = PLOTS.get(suite)
    if func is None or len(record.rows) == 0:
        return None
    return func(record, filename)


def save(fig, ax, record, filename):
    """Add title, legend and grid lines to the plot and write it to file."""
    ax.set_title(record.config.get(cfg.LABEL_NAME, ''))
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3, which='both')
    fig.tight_layout()
    fig.savefig(filename, format='svg', metadata={'Date': None})
    plt.close(fig)
    return filename
