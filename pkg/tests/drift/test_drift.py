"""Test drift specifications, divergence-free fields, mollification, and weak
L2 norms.
"""

import numpy as np
import pytest

from sdlab.discretization.field import DiscreteField
from sdlab.discretization.grid import build_disk_grid
from sdlab.drift.base import (
    DivergenceFreePart, DriftSpec, MollifiedField, StreamField, SwirlField,
    VectorFieldSample, discrete_divergence, eval_drift
)
from sdlab.drift.mollify import convolution_nodes, mollified_drift, mollified_log
from sdlab.drift.norm import METHOD_NODAL, l2_norm, weak_l2_norm
from sdlab.problem.form import bilinear_form

import sdlab.error as err
import sdlab.profile.declaration as pd


def swirl_sample(grid, beta=1.0):
    """Sampled swirl field."""
    return VectorFieldSample(grid, *SwirlField(beta=beta).sample(grid))


class TestDriftSpec(object):
    def test_invalid_parameters(self):
        """Test error cases for drift parameters."""
        with pytest.raises(err.InvalidDriftError):
            DriftSpec(alpha=1.0, epsilon=-1.0)
        with pytest.raises(err.InvalidDriftError):
            DriftSpec(alpha=np.inf)
        with pytest.raises(err.InvalidDriftError):
            MollifiedField(DriftSpec(alpha=1.0, divfree=SwirlField()), 0.1)
        with pytest.raises(err.InvalidDriftError):
            MollifiedField(DriftSpec(alpha=0.0, divfree=SwirlField()), 0.0)
        with pytest.raises(err.InvalidDriftError):
            MollifiedField(DriftSpec(alpha=0.0), 0.1)
        with pytest.raises(err.InvalidDriftError):
            DivergenceFreePart.from_dict({'type': 'unknown'})
        with pytest.raises(err.InvalidDriftError):
            DriftSpec.from_dict({'alpha': 1.0, 'gamma': 2.0})

    def test_serialization(self):
        """Test dictionary serialization of drift specifications."""
        swirl = DriftSpec(alpha=0.0, divfree=SwirlField(beta=0.5))
        spec = DriftSpec(
            alpha=-0.5,
            epsilon=0.1,
            divfree=MollifiedField(swirl, eta=0.2)
        )
        spec = DriftSpec.from_dict(spec.to_dict())
        assert spec.alpha == -0.5
        assert spec.epsilon == 0.1
        assert spec.divfree.is_mollified()
        assert spec.divfree.eta == 0.2
        assert spec.divfree.base.divfree.is_swirl()
        assert spec.divfree.base.divfree.beta == 0.5
        stream = DriftSpec(
            alpha=1.0,
            divfree=StreamField(pd.profile_declaration(pd.VORTEX, sigma=0.3))
        )
        stream = DriftSpec.from_dict(stream.to_dict())
        assert stream.divfree.is_stream()
        assert DriftSpec.from_dict({'alpha': 2.0}).divfree.is_none()

    def test_copies(self):
        """Test modified copies of a drift specification."""
        spec = DriftSpec(alpha=1.0, divfree=SwirlField(beta=0.2))
        assert spec.with_epsilon(0.1).epsilon == 0.1
        assert spec.with_epsilon(0.1).divfree.is_swirl()
        assert spec.with_alpha(-1.0).alpha == -1.0
        assert spec.without_divfree().divfree.is_none()
        assert spec.without_divfree().alpha == 1.0


class TestDriftFields(object):
    def test_eval_drift(self):
        """The singular drift with epsilon = 0 is only sampled in radial-exact
        mode. Its magnitude is |alpha| / r.
        """
        grid = build_disk_grid(8, 16)
        spec = DriftSpec(alpha=2.0)
        with pytest.raises(err.InvalidDriftError):
            eval_drift(spec, grid)
        field = eval_drift(spec, grid, radial_exact=True)
        assert field.radial[0] == 0.0
        assert np.allclose(field.radial[1:], -2.0 / grid.r[1:])
        assert np.allclose(field.angular, 0.0)
        field = eval_drift(spec.with_epsilon(0.1), grid)
        r = grid.r[1:]
        assert np.allclose(field.radial[1:], -2.0 * r / (r ** 2 + 0.01))
        field = eval_drift(DriftSpec(alpha=0.0, divfree=SwirlField(beta=3.0)), grid)
        assert np.allclose(field.angular[1:], 3.0 / grid.r[1:])
        assert np.allclose(field.magnitude()[1:], 3.0 / grid.r[1:])

    def test_divergence_free(self):
        """Swirl, stream, and mollified fields have zero discrete divergence at
        interior nodes.
        """
        grid = build_disk_grid(16, 32)
        div = discrete_divergence(swirl_sample(grid), grid)
        assert np.max(np.abs(div.values)) <= 1e-10
        stream = StreamField(pd.profile_declaration(pd.VORTEX, sigma=0.3))
        field = VectorFieldSample(grid, *stream.sample(grid))
        div = discrete_divergence(field, grid)
        assert np.max(np.abs(div.values[grid.interior])) <= 1e-8
        dipole = StreamField(pd.profile_declaration(pd.DIPOLE, amplitude=2.0))
        mollified = MollifiedField(DriftSpec(alpha=0.0, divfree=dipole), 0.1)
        field = VectorFieldSample(grid, *mollified.sample(grid))
        div = discrete_divergence(field, grid)
        assert np.max(np.abs(div.values[grid.interior])) <= 1e-8
        mollified = MollifiedField(DriftSpec(alpha=0.0, divfree=SwirlField()), 0.2)
        field = VectorFieldSample(grid, *mollified.sample(grid))
        div = discrete_divergence(field, grid)
        assert np.max(np.abs(div.values[grid.interior])) <= 1e-8

    def test_mollification(self):
        """The mollified logarithm equals ln r outside the bump radius and the
        mollified swirl coincides with the swirl there.
        """
        radii = np.array([0.0, 0.05, 0.1, 0.25, 0.5])
        values = mollified_log(radii, 0.2)
        assert values[3] == np.log(0.25)
        assert values[4] == np.log(0.5)
        assert np.all(np.isfinite(values))
        assert np.all(np.diff(values) > 0)
        _, _, w = convolution_nodes(0.1)
        assert np.sum(w) == pytest.approx(1.0)
        grid = build_disk_grid(16, 32)
        spec = mollified_drift(DriftSpec(alpha=1.0, divfree=SwirlField()), 0.2)
        assert spec.alpha == 1.0
        assert spec.divfree.is_mollified()
        field = VectorFieldSample(grid, *spec.divfree.sample(grid))
        outside = grid.interior & (grid.r > 0.35)
        r = grid.r[outside]
        expected = (np.log(r + grid.h_r) - np.log(r - grid.h_r)) / (2.0 * grid.h_r)
        assert np.allclose(field.angular[outside], expected)
        assert np.allclose(field.radial[outside], 0.0)
        assert np.max(field.magnitude()) < np.max(swirl_sample(grid).magnitude())
        assert mollified_drift(DriftSpec(alpha=1.0), 0.2).divfree.is_none()

    def test_regularization_distance(self):
        """Away from the origin the regularized drift is close to the drift
        with a smaller regularization parameter, including the exact drift.
        """
        grid = build_disk_grid(64, 128)
        alpha = 2.0
        for eps in [0.1, 0.05, 0.02]:
            field = eval_drift(DriftSpec(alpha=alpha, epsilon=eps), grid)
            smaller = [
                eval_drift(DriftSpec(alpha=alpha, epsilon=0.1 * eps), grid),
                eval_drift(DriftSpec(alpha=alpha), grid, radial_exact=True)
            ]
            outside = grid.interior & (grid.r >= 2.0 * np.sqrt(eps))
            for other in smaller:
                diff = np.abs(field.radial[outside] - other.radial[outside])
                assert np.max(diff) <= alpha * eps
                assert np.allclose(field.angular[outside], other.angular[outside])

    def test_stream_field_form(self):
        """The divergence-free part contributes nothing to B[v, v] in the
        limit, also for test functions that are not radial.
        """
        dipole = StreamField(pd.profile_declaration(pd.DIPOLE, amplitude=1.0))
        spec = DriftSpec(alpha=0.0, divfree=dipole)
        values = list()
        for n in [16, 32]:
            grid = build_disk_grid(n, 2 * n)
            v = DiscreteField(grid, (1.0 - grid.r ** 2) * (1.0 + grid.y))
            values.append(abs(bilinear_form(v, v, spec, grid)))
        assert values[1] <= 1e-2
        assert values[1] <= max(0.75 * values[0], 1e-12)


class TestWeakNorm(object):
    def test_swirl_norm(self):
        """The weak L2 norm of the swirl and of the radial field x / |x|^2 is
        close to sqrt(pi) times the strength.
        """
        grid = build_disk_grid(64, 128)
        norm = weak_l2_norm(swirl_sample(grid), grid)
        assert abs(norm - np.sqrt(np.pi)) <= 0.1 * np.sqrt(np.pi)
        radial = eval_drift(DriftSpec(alpha=-1.0), grid, radial_exact=True)
        norm = weak_l2_norm(radial, grid)
        assert abs(norm - np.sqrt(np.pi)) <= 0.1 * np.sqrt(np.pi)
        norm = weak_l2_norm(swirl_sample(grid, beta=0.5), grid)
        assert abs(norm - 0.5 * np.sqrt(np.pi)) <= 0.05 * np.sqrt(np.pi)

    def test_norm_properties(self):
        """Test homogeneity and the embedding of L2 into weak L2."""
        grid = build_disk_grid(16, 32)
        field = swirl_sample(grid)
        norm = weak_l2_norm(field, grid)
        assert weak_l2_norm(2.0 * field, grid) == pytest.approx(2.0 * norm, rel=1e-9)
        nodal = weak_l2_norm(field, grid, method=METHOD_NODAL)
        assert nodal <= l2_norm(field, grid)
        zeros = np.zeros(grid.node_count)
        assert weak_l2_norm(VectorFieldSample(grid, zeros, zeros), grid) == 0.0
        with pytest.raises(err.InvalidDriftError):
            weak_l2_norm(field, grid, method='unknown')

    @pytest.mark.parametrize('method', [METHOD_NODAL, 'reconstructed'])
    def test_strict_level_sets(self, method):
        """Nodes at the level do not count towards the level set measure. A
        field of constant magnitude c stays below c times the square root of
        the disk area and approaches it within the sweep resolution.
        """
        grid = build_disk_grid(8, 16)
        c = 1.0
        field = VectorFieldSample(grid, c * np.ones(grid.node_count), np.zeros(grid.node_count))
        bound = c * np.sqrt(np.sum(grid.quad_weights))
        norm = weak_l2_norm(field, grid, method=method)
        assert norm < bound
        assert norm > 0.97 * bound

    def test_mollified_norm(self):
        """Mollification does not increase the weak norm by more than a factor
        of three.
        """
        grid = build_disk_grid(32, 64)
        swirl = weak_l2_norm(swirl_sample(grid), grid)
        for eta in [0.2, 0.1]:
            field = MollifiedField(DriftSpec(alpha=0.0, divfree=SwirlField()), eta)
            sample = VectorFieldSample(grid, *field.sample(grid))
            assert weak_l2_norm(sample, grid) <= 3.0 * swirl
