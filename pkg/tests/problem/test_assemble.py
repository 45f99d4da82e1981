"""Test problem specifications, the assembled finite difference systems, and
the quadrature of the drift bilinear form.
"""

import numpy as np
import pytest

from sdlab.analysis.oracle import manufactured
from sdlab.discretization.field import DiscreteField
from sdlab.discretization.grid import build_disk_grid
from sdlab.drift.base import DriftSpec, SwirlField
from sdlab.problem.assemble import assemble, center_flux_factor, vector_load
from sdlab.problem.base import ProblemSpec, RHS_VECTOR, SCHEME_UPWIND
from sdlab.problem.form import (
    bilinear_form, extrapolated_bilinear_form, quadratic_form_constant
)

import sdlab.error as err
import sdlab.profile.declaration as pd
import sdlab.profile.util as putil


def manufactured_spec(alpha, epsilon, scheme='centered', beta=0.0):
    """Problem with exact solution 1 - r^2."""
    divfree = SwirlField(beta=beta) if beta != 0 else None
    drift = DriftSpec(alpha=alpha, epsilon=epsilon, divfree=divfree)
    g, u_star = manufactured(pd.ONE_MINUS_R2, drift)
    return ProblemSpec(drift=drift, source=g, scheme=scheme), u_star


class TestProblemSpec(object):
    def test_invalid_specifications(self):
        """Test error cases for problem specifications."""
        drift = DriftSpec(alpha=-1.0, epsilon=0.1)
        ProblemSpec(drift=drift, pinned=True, require_unique=True)
        with pytest.raises(err.InvalidProblemError):
            ProblemSpec(drift=drift, require_unique=True)
        with pytest.raises(err.InvalidProblemError):
            ProblemSpec(drift={'alpha': 1.0})
        with pytest.raises(err.InvalidProblemError):
            ProblemSpec(drift=drift, rhs_mode='unknown')
        with pytest.raises(err.InvalidProblemError):
            ProblemSpec(drift=drift, q=2.0)
        with pytest.raises(err.InvalidProfileError):
            ProblemSpec(drift=drift, source=pd.CONSTANT, rhs_mode=RHS_VECTOR)
        with pytest.raises(err.InvalidProfileError):
            ProblemSpec(drift=drift, source=pd.RADIAL_FLUX)

    def test_defaults_and_copies(self):
        """The default source is zero. Copies replace single components."""
        spec = ProblemSpec(drift=DriftSpec(alpha=1.0, epsilon=0.1))
        assert spec.source.center_value() == 0.0
        assert not spec.is_vector_mode()
        pinned = spec.replace(pinned=True)
        assert pinned.pinned
        assert not spec.pinned
        assert pinned.drift is spec.drift
        doc = spec.to_dict()
        assert doc['drift']['alpha'] == 1.0
        assert doc['source'] == {pd.LABEL_ID: pd.CONSTANT, pd.LABEL_VALUE: 0.0}


class TestAssembly(object):
    def test_boundary_and_pinned_rows(self):
        """Boundary rows and the pinned center row are identity rows with
        right-hand side 0.
        """
        grid = build_disk_grid(8, 16)
        spec = ProblemSpec(
            drift=DriftSpec(alpha=-1.0),
            source=pd.profile_declaration(pd.CONSTANT, value=1.0),
            pinned=True
        )
        system = assemble(spec, grid)
        A = system.matrix
        for k in list(grid.ring_nodes(grid.n_r)) + [0]:
            row = A.getrow(k)
            assert row.nnz == 1
            assert row.indices[0] == k
            assert row.data[0] == 1.0
            assert system.rhs[k] == 0.0
        assert np.all(system.rhs[grid.interior] == 1.0)
        assert system.size() == grid.node_count
        assert np.all(system.row_offsets == A.indptr)

    def test_invalid_assembly(self):
        """Unpinned singular problems need regularization or the radial-exact
        mode. Unknown schemes are rejected.
        """
        grid = build_disk_grid(4, 8)
        spec = ProblemSpec(drift=DriftSpec(alpha=1.0))
        with pytest.raises(err.AssemblyError):
            assemble(spec, grid)
        assemble(spec, grid, radial_exact=True)
        spec = ProblemSpec(drift=DriftSpec(alpha=1.0, epsilon=0.1), scheme='unknown')
        with pytest.raises(err.UnknownSchemeError):
            assemble(spec, grid)

    def test_centered_exactness(self):
        """The centered scheme and the center row reproduce 1 - r^2 exactly
        for regularized drifts with and without swirl.
        """
        grid = build_disk_grid(8, 16)
        for alpha, epsilon, beta in [(0.0, 0.0, 0.0), (1.0, 0.1, 0.0), (2.0, 0.05, 1.0)]:
            spec, u_star = manufactured_spec(alpha, epsilon, beta=beta)
            system = assemble(spec, grid)
            exact = u_star.sample(grid)
            residual = system.residual(exact)
            assert np.max(np.abs(residual)) <= 1e-8 * np.max(np.abs(system.rhs))
            assert system.interior_residual(exact) <= 1e-10
            assert system.relative_residual(DiscreteField(grid, exact)) <= 1e-10

    def test_center_flux_factor(self):
        """The flux factor is 1 without regularization and tends to 0 for
        large regularization parameters.
        """
        assert center_flux_factor(0.0, 0.1) == 1.0
        assert 0.0 < center_flux_factor(0.1, 0.1) < 1.0
        assert center_flux_factor(0.001, 0.1) == pytest.approx(1.0, abs=1e-2)
        assert center_flux_factor(10.0, 0.1) == pytest.approx(0.0, abs=1e-4)

    def test_upwind_signs(self):
        """Upwind rows have a positive diagonal and non-positive off-diagonal
        entries.
        """
        grid = build_disk_grid(8, 16)
        spec, _ = manufactured_spec(2.0, 0.1, scheme=SCHEME_UPWIND, beta=1.0)
        system = assemble(spec, grid)
        assert np.all(system.diagonal() > 0)
        A = system.matrix.tocoo()
        off = A.row != A.col
        assert np.all(A.data[off] <= 0.0)
        spec = spec.replace(drift=DriftSpec(alpha=-1.0, epsilon=0.1, divfree=SwirlField()))
        A = assemble(spec, grid).matrix.tocoo()
        interior = grid.interior[A.row] & (A.row != A.col)
        assert np.all(A.data[interior] <= 0.0)

    def test_vector_source(self):
        """In vector mode the right-hand side is the weak load of the source,
        i.e., the negative outward flux through the cell faces per unit area.
        """
        grid = build_disk_grid(16, 32)
        spec = ProblemSpec(
            drift=DriftSpec(alpha=0.0),
            source=pd.RADIAL_FLUX,
            rhs_mode=RHS_VECTOR
        )
        system = assemble(spec, grid)
        r = grid.r[grid.interior]
        assert np.allclose(system.rhs[grid.interior], -(2.0 - 3.0 * r), atol=2.0 * grid.h_r)
        assert system.rhs[0] == pytest.approx(-2.0, abs=2.0 * grid.h_r + 1e-12)
        assert np.all(system.rhs[grid.boundary] == 0.0)

    @pytest.mark.parametrize(
        'source,grid_size,expected,rel',
        [
            (
                {'id': pd.RADIAL_FLUX, 'amplitude': 2.0},
                (16, 32),
                -2.0 * np.pi / 5.0,
                1e-2
            ),
            (
                {'id': pd.ANNULUS_FLUX, 'amplitude': 2.0, 'center': 0.5, 'width': 0.25},
                (32, 64),
                -8.0 * np.pi * (0.75 ** 3 - 0.25 ** 3) / 3.0,
                1e-3
            )
        ]
    )
    def test_vector_load_pairing(self, source, grid_size, expected, rel):
        """Pairing the weak load with 1 - r^2 reproduces the integral of
        f . grad(1 - r^2), also for a source that jumps inside the disk.
        """
        grid = build_disk_grid(*grid_size)
        spec = ProblemSpec(
            drift=DriftSpec(alpha=0.0),
            source=source,
            rhs_mode=RHS_VECTOR
        )
        rhs = assemble(spec, grid).rhs
        eta = 1.0 - grid.r ** 2
        pairing = np.sum(grid.quad_weights * rhs * eta)
        assert pairing == pytest.approx(expected, rel=rel)
        assert pairing == pytest.approx(np.sum(grid.quad_weights * vector_load(spec.source, grid) * eta))


class TestBilinearForm(object):
    def test_quadratic_form_constant(self):
        """The quadratic form of the singular drift tends to pi alpha v(0)^2
        for radial test functions.
        """
        grid = build_disk_grid(32, 64)
        for identifier in [pd.ONE_MINUS_R2, pd.ONE_MINUS_R2_SQUARED]:
            v = DiscreteField(grid, putil.create_profile(identifier).sample(grid))
            for alpha in [1.0, -0.5]:
                kappa = quadratic_form_constant(v, DriftSpec(alpha=alpha), grid)
                assert kappa == pytest.approx(np.pi, rel=0.05)

    def test_invalid_forms(self):
        """Test error cases for the bilinear form."""
        grid = build_disk_grid(4, 8)
        v = DiscreteField(grid, 1.0 - grid.r ** 2)
        with pytest.raises(err.InvalidDriftError):
            bilinear_form(v, v, DriftSpec(alpha=1.0), grid)
        with pytest.raises(err.InvalidDriftError):
            extrapolated_bilinear_form(v, v, DriftSpec(alpha=1.0), grid, epsilons=[0.1])
        with pytest.raises(err.AnalysisError):
            quadratic_form_constant(v, DriftSpec(alpha=0.0), grid)
        with pytest.raises(err.AnalysisError):
            quadratic_form_constant(v - v, DriftSpec(alpha=1.0), grid)
        with pytest.raises(err.GridMismatchError):
            bilinear_form(v, DiscreteField.zeros(build_disk_grid(8, 16)), DriftSpec(alpha=0.0), grid)
        assert bilinear_form(v, v, DriftSpec(alpha=0.0), grid) == 0.0

    def test_form_scaling(self):
        """The quadratic form scales with v(0)^2. Swirls do not act on radial
        test functions.
        """
        grid = build_disk_grid(16, 32)
        v = DiscreteField(grid, 1.0 - grid.r ** 2)
        spec = DriftSpec(alpha=1.0)
        b1 = extrapolated_bilinear_form(v, v, spec, grid)
        b2 = extrapolated_bilinear_form(2.0 * v, 2.0 * v, spec, grid)
        assert b1 > 0
        assert b2 == pytest.approx(4.0 * b1, rel=1e-9)
        swirl = DriftSpec(alpha=0.0, divfree=SwirlField(beta=1.0))
        assert abs(bilinear_form(v, v, swirl, grid)) <= 1e-12
