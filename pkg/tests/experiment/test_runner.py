"""Test experiment runs, run records, and the written artifacts."""

import csv
import os
import pytest

from sdlab.experiment.config import ExperimentConfig
from sdlab.experiment.record import GridResult, RunRecord
from sdlab.experiment.runner import (
    ARTIFACT_PLOT, ARTIFACT_RECORD, ARTIFACT_TABLE, config_files, emit_table,
    format_cell, run, run_suite_dir
)
from sdlab.solver.report import SolveReport
from sdlab.util.core import read_object, write_object

import sdlab.error as err
import sdlab.experiment.config as cfg


def read_csv(filename):
    """Read all rows of a CSV file."""
    with open(filename, newline='') as f:
        return list(csv.reader(f))


class TestRunRecord(object):
    def test_serialization(self):
        """Test dictionary serialization of run records."""
        report = SolveReport(iterations=3, final_residual=1e-9, converged=True)
        record = RunRecord(
            config={cfg.LABEL_NAME: 'r'},
            columns=['a', 'b'],
            rows=[[1, None], [2, 0.5]],
            summary={'value': 1.0},
            checks={'passed': True, 'failed': 0},
            grids=[GridResult((8, 16), label='x', report=report)],
            elapsed_ms=12.5
        )
        assert record.checks == {'passed': True, 'failed': False}
        assert record.failed_checks() == ['failed']
        assert record.column('b') == [None, 0.5]
        assert record.is_converged()
        doc = record.to_dict()
        copy = RunRecord.from_dict(doc)
        assert copy.to_dict() == doc
        assert copy.grids[0].grid == (8, 16)
        assert copy.grids[0].report.iterations == 3
        with pytest.raises(ValueError):
            RunRecord(config={}, columns=['a'], rows=[[1, 2]])
        with pytest.raises(ValueError):
            RunRecord.from_dict({'config': {}, 'columns': []})
        report = SolveReport(iterations=3, final_residual=1.0, converged=False)
        record.grids.append(GridResult((16, 32), report=report))
        assert not record.is_converged()

    def test_emit_table(self, tmpdir):
        """Missing values are empty cells and floats keep full precision."""
        record = RunRecord(
            config={},
            columns=['n_r', 'value', 'label'],
            rows=[[8, None, 'a'], [16, 0.1 + 0.2, 'b']]
        )
        filename = os.path.join(str(tmpdir), 'table.csv')
        emit_table(record, filename)
        rows = read_csv(filename)
        assert rows[0] == ['n_r', 'value', 'label']
        assert rows[1] == ['8', '', 'a']
        assert float(rows[2][1]) == 0.1 + 0.2
        with open(filename) as f:
            first = f.read()
        emit_table(record, filename)
        with open(filename) as f:
            assert f.read() == first
        assert format_cell(None) == ''
        assert format_cell(2) == '2'
        assert format_cell(0.5) == '0.5'


class TestRun(object):
    def test_uniqueness_run(self, tmpdir):
        """Homogeneous problems are driven from a random start vector to the
        zero solution. Suites without a plot write the table and the record
        only.
        """
        config = ExperimentConfig({
            cfg.LABEL_NAME: 'unique',
            cfg.LABEL_SUITE: cfg.SUITE_UNIQUENESS,
            cfg.LABEL_ALPHAS: [0.5],
            cfg.LABEL_BETAS: [0.0, 0.2],
            cfg.LABEL_GRIDS: [[8, 16]]
        })
        outdir = os.path.join(str(tmpdir), 'out')
        record = run(config, output_dir=outdir)
        assert record.checks == {'homogeneousZero': True, 'inverseBounded': True}
        assert len(record.rows) == 2
        for sup, growth in zip(record.column('sup_norm'), record.column('inverse_growth')):
            assert 0.0 < sup <= 10.0 * config.tol * max(1.0, growth)
        assert record.is_converged()
        assert all(g.report.iterations > 0 for g in record.grids)
        assert record.elapsed_ms > 0
        assert not ARTIFACT_PLOT in record.artifacts
        assert record.artifacts[ARTIFACT_TABLE] == os.path.join(outdir, 'unique.csv')
        rows = read_csv(record.artifacts[ARTIFACT_TABLE])
        assert rows[0] == ['alpha', 'beta', 'n_r', 'n_theta', 'sup_norm', 'inverse_growth']
        assert len(rows) == 3
        doc = read_object(record.artifacts[ARTIFACT_RECORD])
        copy = RunRecord.from_dict(doc)
        assert copy.checks == record.checks
        assert copy.config[cfg.LABEL_NAME] == 'unique'
        assert copy.config[cfg.LABEL_SCHEME] == 'centered'
        assert len(copy.grids) == 2

    def test_drift_norms_run(self, tmpdir):
        """Radial rows have no mollification radius and are written with an
        empty cell.
        """
        config = ExperimentConfig({
            cfg.LABEL_NAME: 'norms',
            cfg.LABEL_SUITE: cfg.SUITE_DRIFT_NORMS,
            cfg.LABEL_ETAS: [0.2],
            cfg.LABEL_GRIDS: [[16, 32]]
        })
        record = run(config, output_dir=str(tmpdir), tol=1e-6)
        assert record.config[cfg.LABEL_TOL] == 1e-6
        assert record.column('field') == ['radial', 'swirl', 'mollified']
        assert record.checks['mollifiedDivergence']
        assert set(record.checks.keys()) == set([
            'radialWeakNorm', 'swirlWeakNorm', 'mollifiedDivergence', 'mollifiedNorm'
        ])
        rows = read_csv(os.path.join(str(tmpdir), 'norms.csv'))
        assert rows[1][0] == 'radial'
        assert rows[1][1] == ''
        assert rows[3][1] == '0.2'

    def test_convergence_plot(self, tmpdir):
        """The convergence suite writes a log-log plot of the errors."""
        config = ExperimentConfig({
            cfg.LABEL_NAME: 'conv',
            cfg.LABEL_SUITE: cfg.SUITE_CONVERGENCE,
            cfg.LABEL_ALPHA: 1.0,
            cfg.LABEL_GRIDS: [[8, 16], [16, 32], [32, 64]],
            cfg.LABEL_TOL: 1e-10
        })
        record = run(config, output_dir=str(tmpdir))
        assert record.is_converged()
        assert len(record.rows) == 3
        assert record.column('order_running')[0] is None
        errors = record.column('error_sup')
        assert errors[0] > errors[1] > errors[2] > 0
        assert record.summary['errorMeasure'] == 'sup'
        assert 'order' in record.checks
        plot_file = record.artifacts[ARTIFACT_PLOT]
        assert plot_file == os.path.join(str(tmpdir), 'conv.svg')
        assert os.path.isfile(plot_file)
        config = config.replace(**{cfg.LABEL_PLOT: False, cfg.LABEL_NAME: 'noplot'})
        record = run(config, output_dir=str(tmpdir))
        assert not ARTIFACT_PLOT in record.artifacts

    def test_run_suite_dir(self, tmpdir):
        """Configurations in a directory are run in sorted order."""
        confdir = os.path.join(str(tmpdir), 'config')
        os.makedirs(confdir)
        doc = {
            cfg.LABEL_SUITE: cfg.SUITE_UNIQUENESS,
            cfg.LABEL_ALPHAS: [1.0],
            cfg.LABEL_BETAS: [0.0],
            cfg.LABEL_GRIDS: [[8, 16]]
        }
        write_object(os.path.join(confdir, 'b.yml'), doc)
        write_object(os.path.join(confdir, 'a.json'), doc)
        with open(os.path.join(confdir, 'notes.txt'), 'w') as f:
            f.write('not a configuration')
        files = config_files(confdir)
        assert [os.path.basename(f) for f in files] == ['a.json', 'b.yml']
        outdir = os.path.join(str(tmpdir), 'results')
        records = run_suite_dir(confdir, output_dir=outdir)
        assert [r.config[cfg.LABEL_NAME] for r in records] == ['a', 'b']
        assert os.path.isfile(os.path.join(outdir, 'a', 'a.json'))
        assert os.path.isfile(os.path.join(outdir, 'b', 'b.csv'))
        with pytest.raises(err.InvalidConfigError):
            run_suite_dir(os.path.join(str(tmpdir), 'missing'))
        empty = os.path.join(str(tmpdir), 'empty')
        os.makedirs(empty)
        with pytest.raises(err.InvalidConfigError):
            run_suite_dir(empty)
