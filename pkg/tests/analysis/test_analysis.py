"""Test exact solutions, manufactured problems, norms, oscillation tables, and
convergence order fits.
"""

import numpy as np
import pytest

from sdlab.analysis.estimate import (
    EstimateReport, energy_norm, fit_convergence_order, fitted_mu, grad_lp,
    lq_norm, max_contraction, measure, oscillation_contraction,
    oscillation_table, source_potential_norm
)
from sdlab.analysis.oracle import (
    kernel_energy_norm, kernel_solution, manufactured, radial_family
)
from sdlab.discretization.field import DiscreteField
from sdlab.discretization.grid import build_disk_grid
from sdlab.drift.base import DriftSpec, StreamField, SwirlField
from sdlab.problem.assemble import assemble
from sdlab.problem.base import ProblemSpec

import sdlab.error as err
import sdlab.profile.declaration as pd
import sdlab.profile.util as putil


class TestOracle(object):
    def test_kernel_solution(self):
        """Test nodal values and energy norms of the kernel solutions."""
        grid = build_disk_grid(4, 8)
        u = kernel_solution(-1.0, 1.0, grid)
        assert u.values[grid.index(2, 3)] == pytest.approx(-0.5)
        assert u.center_value == -1.0
        assert np.all(u.values[grid.boundary] == 0.0)
        with pytest.raises(err.AnalysisError):
            kernel_solution(0.5, 1.0, grid)
        with pytest.raises(err.AnalysisError):
            kernel_energy_norm(0.0, 1.0)
        grid = build_disk_grid(32, 64)
        u = kernel_solution(-2.0, 1.0, grid)
        expected = np.sqrt(2.0 * np.pi + np.pi / 3.0)
        assert kernel_energy_norm(-2.0, 1.0) == pytest.approx(expected)
        assert kernel_energy_norm(-2.0, -3.0) == pytest.approx(3.0 * expected)
        assert energy_norm(u) == pytest.approx(expected, rel=1e-2)

    def test_radial_family(self):
        """Test the radial solutions of the homogeneous equation."""
        grid = build_disk_grid(4, 8)
        u = radial_family(-1.0, 2.0, 1.0, grid)
        assert u.center_value == 1.0
        assert u.values[grid.index(2, 0)] == pytest.approx(2.0)
        u = radial_family(0.0, 1.0, 0.0, grid, center_value=-10.0)
        assert u.values[grid.index(4, 0)] == 0.0
        assert u.center_value == -10.0
        with pytest.raises(err.AnalysisError):
            radial_family(1.0, 1.0, 0.0, grid)
        assert radial_family(1.0, 0.0, 3.0, grid).center_value == 3.0

    def test_residual_oracles(self):
        """The assembled homogeneous operator nearly annihilates the radial
        solutions r^-1 (alpha = 1) on an annulus and the kernel function
        r^0.5 - 1 (alpha = -0.5) away from the center. A function that solves
        neither equation has a much larger residual.
        """
        grid = build_disk_grid(128, 256)
        system = assemble(ProblemSpec(drift=DriftSpec(alpha=1.0)), grid, radial_exact=True)
        u = radial_family(1.0, 1.0, 0.0, grid, center_value=0.0)
        residual = system.interior_residual(u, r_min=0.25)
        assert residual <= 1e-2
        other = radial_family(-1.0, 1.0, 0.0, grid)
        assert system.interior_residual(other, r_min=0.25) >= 10.0 * residual
        system = assemble(ProblemSpec(drift=DriftSpec(alpha=-0.5)), grid, radial_exact=True)
        kernel = kernel_solution(-0.5, 1.0, grid)
        assert system.interior_residual(kernel) <= 5e-3

    def test_manufactured(self):
        """Test admissible exact solutions and drifts of manufactured
        problems.
        """
        drift = DriftSpec(alpha=1.0, divfree=SwirlField())
        g, u_star = manufactured(pd.ONE_MINUS_R2, drift)
        assert g.center_value() == pytest.approx(6.0)
        assert u_star.identifier == pd.ONE_MINUS_R2
        g, _ = manufactured(putil.create_profile(pd.R2_ONE_MINUS_R), drift, pinned=True)
        assert g.is_integrable()
        with pytest.raises(err.AnalysisError):
            manufactured(pd.ONE_MINUS_R2, drift, pinned=True)
        with pytest.raises(err.AnalysisError):
            manufactured(pd.ANNULUS_BUMP, drift)
        dipole = DriftSpec(alpha=1.0, divfree=StreamField(pd.DIPOLE))
        with pytest.raises(err.AnalysisError):
            manufactured(pd.ONE_MINUS_R2, dipole)


class TestNorms(object):
    def test_norms_of_quadratic(self):
        """Test discrete norms of 1 - r^2 against the exact values."""
        grid = build_disk_grid(32, 64)
        u = DiscreteField(grid, 1.0 - grid.r ** 2)
        assert energy_norm(u) == pytest.approx(np.sqrt(7.0 * np.pi / 3.0), rel=1e-2)
        norms = grad_lp(u)
        assert sorted(norms.keys()) == [2.0, 2.5, 3.0, 4.0]
        assert norms[2.0] == pytest.approx(np.sqrt(2.0 * np.pi), rel=1e-2)
        ones = DiscreteField(grid, np.ones(grid.node_count))
        assert lq_norm(ones, 2.0) == pytest.approx(np.sqrt(np.pi), rel=1e-2)
        assert lq_norm(ones, 4.0) == pytest.approx(np.pi ** 0.25, rel=1e-2)

    def test_source_potential_norm(self):
        """The potential of the source 4 is 1 - r^2."""
        grid = build_disk_grid(16, 32)
        source = putil.create_profile(pd.profile_declaration(pd.CONSTANT, value=4.0))
        norm = source_potential_norm(source, grid)
        assert norm == pytest.approx(np.sqrt(2.0 * np.pi), rel=2e-2)


class TestOscillation(object):
    def test_oscillation_table(self):
        """Test oscillation tables and the fitted Hoelder exponent."""
        with pytest.raises(err.AnalysisError):
            oscillation_table(DiscreteField.zeros(build_disk_grid(4, 8)))
        grid = build_disk_grid(16, 32)
        table = oscillation_table(DiscreteField(grid, 1.0 - grid.r ** 2))
        assert [R for R, _ in table] == [1.0, 0.5, 0.25]
        assert [osc for _, osc in table] == pytest.approx([1.0, 0.25, 0.0625])
        # Slope 2 is clipped
        assert fitted_mu(table) == 1.5
        table = oscillation_table(DiscreteField(grid, np.sqrt(grid.r)))
        assert fitted_mu(table) == pytest.approx(0.5)
        assert fitted_mu(oscillation_table(DiscreteField.zeros(grid))) == 0.0
        assert fitted_mu([(1.0, 1.0)]) == 0.0

    def test_contraction(self):
        """Contraction ratios of r^(1/2) are 1/2."""
        with pytest.raises(err.AnalysisError):
            oscillation_contraction(DiscreteField.zeros(build_disk_grid(16, 32)))
        grid = build_disk_grid(32, 64)
        ratios = oscillation_contraction(
            DiscreteField(grid, np.sqrt(grid.r)),
            q=4.0,
            f_norm=1.0
        )
        assert [R for R, _ in ratios] == [0.5, 0.25]
        assert [ratio for _, ratio in ratios] == pytest.approx([0.5, 0.5])
        assert max_contraction(ratios) == pytest.approx(0.5)
        assert oscillation_contraction(DiscreteField(grid, np.ones(grid.node_count))) == []
        with pytest.raises(err.AnalysisError):
            max_contraction([])


class TestReports(object):
    def test_convergence_order(self):
        """Test the least-squares convergence order."""
        h = [1.0 / 8, 1.0 / 16, 1.0 / 32]
        assert fit_convergence_order([x ** 2 for x in h], h) == pytest.approx(2.0)
        assert fit_convergence_order([3.0 * x for x in h], h) == pytest.approx(1.0)
        with pytest.raises(err.AnalysisError):
            fit_convergence_order([1.0, 0.5], h[:2])
        with pytest.raises(err.AnalysisError):
            fit_convergence_order([1.0, 0.0, 0.5], h)
        with pytest.raises(err.AnalysisError):
            fit_convergence_order([1.0, 0.5, 0.25], list(reversed(h)))

    def test_estimate_report(self):
        """Test measurements and the serialization of estimate reports."""
        grid = build_disk_grid(16, 32)
        report = measure(DiscreteField(grid, 1.0 - grid.r ** 2), fitted_order=2.0)
        assert report.sup_norm == 1.0
        assert report.fitted_mu == 1.5
        assert report.fitted_order == 2.0
        assert len(report.osc_table) == 3
        doc = report.to_dict()
        assert sorted(doc['gradLp'].keys()) == ['2.0', '2.5', '3.0', '4.0']
        copy = EstimateReport.from_dict(doc)
        assert copy.to_dict() == doc
        assert copy.grad_lp == report.grad_lp
