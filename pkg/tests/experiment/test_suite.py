"""Test the experiment suites on small grids. Where a check depends on the
configuration, the suite is also run with a configuration that makes the
check fail.
"""

import numpy as np
import pytest

from sdlab.experiment.config import ExperimentConfig
from sdlab.experiment.suite import (
    run_convergence, run_energy_stability, run_epsilon_continuation,
    run_nonuniqueness, run_oscillation, run_pinning_equivalence,
    run_quadratic_form, run_uniqueness
)

import sdlab.experiment.config as cfg
import sdlab.profile.declaration as pd


"""Unit source."""
ONE = pd.profile_declaration(pd.CONSTANT, value=1.0)


def config(suite, **kwargs):
    """Experiment configuration for the given suite."""
    doc = {cfg.LABEL_NAME: suite, cfg.LABEL_SUITE: suite}
    doc.update(kwargs)
    return ExperimentConfig(doc)


class TestConvergence(object):
    def test_cubic_solution(self):
        """The default solution is not reproduced by the centered scheme. The
        nodal error decreases by roughly four per refinement.
        """
        record = run_convergence(config(
            cfg.SUITE_CONVERGENCE,
            alpha=1.0,
            grids=[[8, 16], [16, 32], [32, 64]],
            tol=1e-10
        ))
        assert record.config[cfg.LABEL_SOLUTION] == pd.R2_ONE_MINUS_R
        assert record.summary['errorMeasure'] == 'sup'
        errors = record.column('error_sup')
        assert errors[-1] > 1e-8
        for e1, e2 in zip(errors[:-1], errors[1:]):
            assert e1 / e2 >= 3.0
        assert all(e > 0 for e in record.column('error_energy'))
        assert 1.5 <= record.summary['fittedOrder'] <= 2.5

    def test_quadratic_solution(self):
        """The centered scheme reproduces 1 - r^2 at the nodes. The errors are
        at the level of the solver tolerance and do not fit an order in the
        centered band.
        """
        record = run_convergence(config(
            cfg.SUITE_CONVERGENCE,
            alpha=1.0,
            grids=[[8, 16], [16, 32], [32, 64]],
            solution=pd.ONE_MINUS_R2,
            tol=1e-10
        ))
        assert max(record.column('error_sup')) <= 1e-6


class TestPinningEquivalence(object):
    def test_pinned_solutions(self):
        """Both pinned solutions vanish at the center and agree. Reversing the
        grid sequence breaks the refinement checks.
        """
        doc = {
            cfg.LABEL_ALPHA: -0.5,
            cfg.LABEL_SOURCE: ONE,
            cfg.LABEL_GRIDS: [[8, 16], [16, 32]]
        }
        record = run_pinning_equivalence(config(cfg.SUITE_PINNING_EQUIVALENCE, **doc))
        assert set(record.checks.keys()) == set([
            'agreement', 'centerZero', 'directConvergence', 'kernelViolation',
            'interiorResidualDecrease'
        ])
        assert record.checks['agreement']
        assert record.checks['centerZero']
        assert record.column('center_cov') == [0.0, 0.0]
        assert all(d > 0 for d in record.column('diff_cov_direct'))
        doc[cfg.LABEL_GRIDS] = [[16, 32], [8, 16]]
        record = run_pinning_equivalence(config(cfg.SUITE_PINNING_EQUIVALENCE, **doc))
        assert not record.checks['directConvergence']
        doc[cfg.LABEL_GRIDS] = [[16, 32]]
        record = run_pinning_equivalence(config(cfg.SUITE_PINNING_EQUIVALENCE, **doc))
        assert not record.checks['directConvergence']


class TestNonuniqueness(object):
    def test_kernel_residual(self):
        """The kernel residual decreases under refinement."""
        doc = {cfg.LABEL_ALPHA: -0.5, cfg.LABEL_GRIDS: [[8, 16], [16, 32]]}
        record = run_nonuniqueness(config(cfg.SUITE_NONUNIQUENESS, **doc))
        assert set(record.checks.keys()) == set([
            'residualDecrease', 'energyStable', 'energyNearAnalytic'
        ])
        assert record.checks['residualDecrease']
        assert record.column('condition') == [None, None]
        doc[cfg.LABEL_GRIDS] = [[16, 32], [8, 16]]
        record = run_nonuniqueness(config(cfg.SUITE_NONUNIQUENESS, **doc))
        assert not record.checks['residualDecrease']


class TestOscillation(object):
    def test_fitted_exponent(self):
        """The oscillation exponent of the pinned solution follows |alpha|."""
        doc = {cfg.LABEL_ALPHA: -0.5, cfg.LABEL_GRIDS: [[32, 64]]}
        record = run_oscillation(config(cfg.SUITE_OSCILLATION, **doc))
        assert set(record.checks.keys()) == set(['contraction', 'fittedMu'])
        assert record.summary['fittedMu'] > 0
        doc[cfg.LABEL_ALPHA] = -0.05
        record = run_oscillation(config(cfg.SUITE_OSCILLATION, **doc))
        assert not record.checks['fittedMu']
        assert record.summary['fittedMu'] < 0.35


class TestEnergyStability(object):
    def test_seeded_sources(self):
        """The random source family is determined by the seed."""
        doc = {
            cfg.LABEL_ALPHA: 1.0,
            cfg.LABEL_BETAS: [0.0, 0.1],
            cfg.LABEL_GRIDS: [[16, 32], [32, 64]],
            cfg.LABEL_SOURCES: 2
        }
        record = run_energy_stability(config(cfg.SUITE_ENERGY_STABILITY, **doc))
        assert set(record.checks.keys()) == set(['ratioStable', 'gradLpStable'])
        assert len(record.rows) == 4
        assert all(r > 0 for r in record.column('ratio'))
        assert len(record.summary['gradLpRatios']) == 4
        copy = run_energy_stability(config(cfg.SUITE_ENERGY_STABILITY, **doc))
        assert copy.rows == record.rows
        assert copy.summary['sources'] == record.summary['sources']
        doc[cfg.LABEL_SEED] = 1
        other = run_energy_stability(config(cfg.SUITE_ENERGY_STABILITY, **doc))
        assert other.summary['sources'] != record.summary['sources']


class TestEpsilonContinuation(object):
    def test_schedule(self):
        """Increments decrease along a geometric schedule and every epsilon
        of the schedule is reported. Closely spaced epsilons do not give a
        Cauchy decrease.
        """
        doc = {
            cfg.LABEL_ALPHA: 1.0,
            cfg.LABEL_EPSILONS: [0.1, 0.01, 0.001],
            cfg.LABEL_GRIDS: [[8, 16]]
        }
        record = run_epsilon_continuation(config(cfg.SUITE_EPSILON_CONTINUATION, **doc))
        assert record.checks == {'cauchyDecrease': True}
        assert record.column('epsilon') == pytest.approx([0.1, 0.01, 0.001])
        assert record.column('increment')[0] is None
        doc[cfg.LABEL_EPSILONS] = [0.1, 0.09, 0.08]
        record = run_epsilon_continuation(config(cfg.SUITE_EPSILON_CONTINUATION, **doc))
        assert record.checks == {'cauchyDecrease': False}
        assert len(record.rows) == 3


class TestQuadraticForm(object):
    def test_kappa(self):
        """The constant of the quadratic form is close to pi for both
        profiles and both signs of alpha.
        """
        record = run_quadratic_form(config(
            cfg.SUITE_QUADRATIC_FORM,
            alphas=[1.0, -0.5],
            grids=[[16, 32], [32, 64]]
        ))
        assert set(record.checks.keys()) == set([
            'positive', 'gridStable', 'kappaBand', 'profileIndependent'
        ])
        assert record.checks['positive']
        assert record.checks['kappaBand']
        assert record.summary['kappa'] == pytest.approx(np.pi, rel=0.05)
        assert len(record.rows) == 8


class TestUniqueness(object):
    def test_bounded_growth(self):
        """The growth of the inverse operator stays bounded under refinement
        for alpha >= 0 with and without swirl.
        """
        record = run_uniqueness(config(
            cfg.SUITE_UNIQUENESS,
            alphas=[1.0],
            betas=[0.0, 0.2],
            grids=[[8, 16], [16, 32]]
        ))
        assert record.checks == {'homogeneousZero': True, 'inverseBounded': True}
        growth = record.column('inverse_growth')
        assert len(growth) == 4
        assert all(g > 0 for g in growth)
        assert growth[1] <= 2.5 * growth[0]
