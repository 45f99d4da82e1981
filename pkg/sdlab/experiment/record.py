# This file is part of the Singular Drift Laboratory (sdlab).
#
# Copyright (C) 2019 NYU.
#
# sdlab is free software; you can redistribute it and/or modify it under the
# terms of the MIT License; see LICENSE file for more details.

"""Records of experiment runs. A run record contains the configuration, the
result table, summary values, the outcome of named checks, per-grid
measurements and solver reports, the wall-clock time, and the paths of all
written artifacts. Records are serialized as JSON objects.
"""

from sdlab.analysis.estimate import EstimateReport
from sdlab.solver.report import SolveReport
from sdlab.util.core import validate_doc


"""Labels for serialization."""
LABEL_ARTIFACTS = 'artifacts'
LABEL_CHECKS = 'checks'
LABEL_COLUMNS = 'columns'
LABEL_CONFIG = 'config'
LABEL_ELAPSED_MS = 'elapsedMs'
LABEL_ESTIMATE = 'estimate'
LABEL_GRID = 'grid'
LABEL_GRIDS = 'grids'
LABEL_LABEL = 'label'
LABEL_REPORT = 'report'
LABEL_ROWS = 'rows'
LABEL_SUMMARY = 'summary'


class GridResult(object):
    """Measurement and solver report for one solve on one grid. The label
    distinguishes multiple solves on the same grid.
    """
    def __init__(self, grid, label=None, estimate=None, report=None):
        """Initialize the result components.

        Parameters
        ----------
        grid: (int, int)
            Grid size (n_r, n_theta)
        label: string, optional
            Label of the solve
        estimate: sdlab.analysis.estimate.EstimateReport, optional
            Measurements of the solution
        report: sdlab.solver.report.SolveReport, optional
            Solver report
        """
        self.grid = (int(grid[0]), int(grid[1]))
        self.label = label
        self.estimate = estimate
        self.report = report

    @staticmethod
    def from_dict(doc):
        """Get result from its dictionary serialization.

        Parameters
        ----------
        doc: dict
            Dictionary serialization as created by to_dict()

        Returns
        -------
        sdlab.experiment.record.GridResult

        Raises
        ------
        ValueError
        """
        validate_doc(
            doc,
            mandatory_labels=[LABEL_GRID],
            optional_labels=[LABEL_LABEL, LABEL_ESTIMATE, LABEL_REPORT]
        )
        estimate = doc.get(LABEL_ESTIMATE)
        report = doc.get(LABEL_REPORT)
        return GridResult(
            grid=doc[LABEL_GRID],
            label=doc.get(LABEL_LABEL),
            estimate=EstimateReport.from_dict(estimate) if not estimate is None else None,
            report=SolveReport.from_dict(report) if not report is None else None
        )

    def to_dict(self):
        """Get dictionary serialization of the result.

        Returns
        -------
        dict
        """
        doc = {LABEL_GRID: list(self.grid), LABEL_LABEL: self.label}
        doc[LABEL_ESTIMATE] = self.estimate.to_dict() if not self.estimate is None else None
        doc[LABEL_REPORT] = self.report.to_dict() if not self.report is None else None
        return doc


class RunRecord(object):
    """Result of a single experiment run."""
    def __init__(
        self, config, columns, rows, summary=None, checks=None, grids=None,
        elapsed_ms=0.0, artifacts=None
    ):
        """Initialize the record components.

        Parameters
        ----------
        config: dict
            Echo of the experiment configuration
        columns: list(string)
            Column names of the result table
        rows: list(list)
            Rows of the result table. Missing values are None.
        summary: dict, optional
            Named summary values
        checks: dict, optional
            Outcome of named checks
        grids: list(sdlab.experiment.record.GridResult), optional
            Per-grid measurements and solver reports
        elapsed_ms: float, optional
            Wall-clock time in milliseconds
        artifacts: dict, optional
            Paths of written files keyed by artifact type

        Raises
        ------
        ValueError
        """
        for row in rows:
            if len(row) != len(columns):
                raise ValueError('row length does not match number of columns')
        self.config = config
        self.columns = list(columns)
        self.rows = [list(row) for row in rows]
        self.summary = dict(summary) if not summary is None else dict()
        self.checks = {k: bool(v) for k, v in checks.items()} if not checks is None else dict()
        self.grids = list(grids) if not grids is None else list()
        self.elapsed_ms = float(elapsed_ms)
        self.artifacts = dict(artifacts) if not artifacts is None else dict()

    @staticmethod
    def from_dict(doc):
        """Get record from its dictionary serialization.

        Parameters
        ----------
        doc: dict
            Dictionary serialization as created by to_dict()

        Returns
        -------
        sdlab.experiment.record.RunRecord

        Raises
        ------
        ValueError
        """
        validate_doc(
            doc,
            mandatory_labels=[LABEL_CONFIG, LABEL_COLUMNS, LABEL_ROWS],
            optional_labels=[
                LABEL_SUMMARY,
                LABEL_CHECKS,
                LABEL_GRIDS,
                LABEL_ELAPSED_MS,
                LABEL_ARTIFACTS
            ]
        )
        return RunRecord(
            config=doc[LABEL_CONFIG],
            columns=doc[LABEL_COLUMNS],
            rows=doc[LABEL_ROWS],
            summary=doc.get(LABEL_SUMMARY),
            checks=doc.get(LABEL_CHECKS),
            grids=[GridResult.from_dict(g) for g in doc.get(LABEL_GRIDS, list())],
            elapsed_ms=doc.get(LABEL_ELAPSED_MS, 0.0),
            artifacts=doc.get(LABEL_ARTIFACTS)
        )

    def column(self, name):
        """Values of the table column with the given name.

        Parameters
        ----------
        name: string
            Column name

        Returns
        -------
        list
        """
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def failed_checks(self):
        """Names of all checks that did not pass.

        Returns
        -------
        list(string)
        """
        return sorted(name for name, passed in self.checks.items() if not passed)

    def is_converged(self):
        """Test whether all recorded solves converged.

        Returns
        -------
        bool
        """
        for g in self.grids:
            if not g.report is None and not g.report.converged:
                return False
        return True

    def to_dict(self):
        """Get dictionary serialization of the record.

        Returns
        -------
        dict
        """
        return {
            LABEL_CONFIG: self.config,
            LABEL_COLUMNS: self.columns,
            LABEL_ROWS: self.rows,
            LABEL_SUMMARY: self.summary,
            LABEL_CHECKS: self.checks,
            LABEL_GRIDS: [g.to_dict() for g in self.grids],
            LABEL_ELAPSED_MS: self.elapsed_ms,
            LABEL_ARTIFACTS: self.artifacts
        }
