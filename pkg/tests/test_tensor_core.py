"""Unit tests for tensor storage, contractions, and frame operations."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from curvlike.errors import (
    DimensionMismatch,
    InvalidDimension,
    InvalidTensor,
    NonOrthonormalPair,
    NotOrthogonal,
    NotUnitVector,
    ValidationError,
)
from curvlike.gauss_bounds import build_T_from_zeta
from curvlike.sampling import sample_general, random_orthogonal, random_unit
from curvlike.tensor_core import (
    BundleValuedForm,
    CurvatureLikeTensor,
    Dimensions,
    null_space,
    orthonormal_complement,
    pair_exchange_residual,
    rotate_frame,
    rotation_to_first_axis,
    t_ricci,
    t_ricci_form,
    t_scalar,
    t_sectional,
    trace_norm_sq,
    trace_zeta,
    validate_curvature_symmetries,
    zeta_norm_sq,
)
from curvlike.optim_lemmas import max_ricci


class TestDimensions:
    def test_desk_scale_guards(self):
        Dimensions(1, 1)
        Dimensions(16, 32)
        with pytest.raises(InvalidDimension):
            Dimensions(0, 1)
        with pytest.raises(InvalidDimension):
            Dimensions(17, 1)
        with pytest.raises(InvalidDimension):
            Dimensions(2, 33)

    def test_form_rejects_bad_shapes(self):
        with pytest.raises(DimensionMismatch):
            BundleValuedForm(np.zeros((2, 3, 2)))
        with pytest.raises(InvalidDimension):
            BundleValuedForm(np.zeros((33, 2, 2)))


class TestBundleValuedForm:
    def test_symmetry_is_bitwise_exact(self):
        rng = np.random.default_rng(0)
        raw = rng.standard_normal((3, 4, 4))
        sym = 0.5 * (raw + raw.transpose(0, 2, 1))
        form = BundleValuedForm(sym)
        assert np.array_equal(form.components, form.components.transpose(0, 2, 1))

    def test_rejects_asymmetric_input_naming_indices(self):
        comps = np.zeros((1, 2, 2))
        comps[0, 0, 1] = 1e-3
        with pytest.raises(ValidationError, match=r"zeta\[0\]\[0\]\[1\]"):
            BundleValuedForm(comps)

    def test_rejects_non_finite(self):
        comps = np.zeros((1, 2, 2))
        comps[0, 0, 0] = np.inf
        with pytest.raises(ValidationError):
            BundleValuedForm(comps)

    def test_components_read_only(self):
        form = BundleValuedForm.zeros(2, 2)
        with pytest.raises(ValueError):
            form.components[0, 0, 0] = 1.0


class TestSymmetryValidation:
    def test_zero_tensor_passes(self):
        report = validate_curvature_symmetries(CurvatureLikeTensor.zeros(3))
        assert report.passed
        assert report.max_residual == 0.0

    def test_gauss_built_passes_tight(self, h_umbilical_ref):
        tensor = build_T_from_zeta(h_umbilical_ref)
        report = validate_curvature_symmetries(tensor, tol=1e-12)
        assert report.passed

    def test_perturbed_entry_fails(self, h_umbilical_ref):
        tensor = build_T_from_zeta(h_umbilical_ref)
        comps = np.array(tensor.components)
        comps[0, 1, 1, 0] += 1e-3
        bad = CurvatureLikeTensor(comps)
        report = validate_curvature_symmetries(bad, tol=1e-6)
        assert not report.passed
        assert report.skew_first_pair == pytest.approx(1e-3, rel=1e-9)


class TestSectional:
    def test_zero_tensor(self):
        assert t_sectional(CurvatureLikeTensor.zeros(2), [1.0, 0.0], [0.0, 1.0]) == 0.0

    def test_h_umbilical_reference(self, h_umbilical_ref):
        tensor = build_T_from_zeta(h_umbilical_ref)
        assert t_sectional(tensor, [1.0, 0.0], [0.0, 1.0]) == pytest.approx(2.0, abs=1e-14)

    def test_swap_symmetry_on_random_instances(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = int(rng.integers(2, 5))
            zeta = sample_general(rng, n, int(rng.integers(1, 4)))
            tensor = build_T_from_zeta(zeta)
            q = random_orthogonal(rng, n)
            x, y = q[0], q[1]
            assert t_sectional(tensor, x, y) == pytest.approx(
                t_sectional(tensor, y, x), abs=1e-10
            )

    def test_rejects_non_unit(self):
        tensor = CurvatureLikeTensor.zeros(2)
        with pytest.raises(NotUnitVector):
            t_sectional(tensor, [2.0, 0.0], [0.0, 1.0])

    def test_rejects_non_orthogonal_pair(self):
        tensor = CurvatureLikeTensor.zeros(2)
        s = 1.0 / np.sqrt(2.0)
        with pytest.raises(NonOrthonormalPair):
            t_sectional(tensor, [1.0, 0.0], [s, s])


class TestRicci:
    def test_zero(self):
        assert np.array_equal(t_ricci_form(CurvatureLikeTensor.zeros(3)), np.zeros((3, 3)))

    def test_h_umbilical_form_is_twice_identity(self, h_umbilical_ref):
        s = t_ricci_form(build_T_from_zeta(h_umbilical_ref))
        assert_allclose(s, 2.0 * np.eye(2), atol=1e-14)

    def test_umbilical_n3_value(self, umbilical_n3):
        tensor = build_T_from_zeta(umbilical_n3)
        assert t_ricci(tensor, [1.0, 0.0, 0.0]) == pytest.approx(2.0, abs=1e-14)

    def test_basis_independence(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            n = int(rng.integers(2, 5))
            zeta = sample_general(rng, n, 3)
            tensor = build_T_from_zeta(zeta)
            s = t_ricci_form(tensor)
            q = random_orthogonal(rng, n)
            conj = np.einsum("ai,bj,ck,dl,ijkl->abcd", q, q, q, q, tensor.components)
            s_rot = t_ricci_form(CurvatureLikeTensor(conj), tol=1e-8)
            assert_allclose(s_rot, q @ s @ q.T, atol=1e-10)

    def test_invalid_tensor_rejected(self):
        comps = np.zeros((2, 2, 2, 2))
        comps[0, 0, 0, 0] = 1.0  # breaks antisymmetry
        with pytest.raises(InvalidTensor):
            t_ricci_form(CurvatureLikeTensor(comps))


class TestScalar:
    def test_zero(self):
        assert t_scalar(CurvatureLikeTensor.zeros(4)) == 0.0

    def test_h_umbilical(self, h_umbilical_ref):
        tensor = build_T_from_zeta(h_umbilical_ref)
        tau = t_scalar(tensor)
        assert tau == pytest.approx(2.0, abs=1e-14)
        cross = 0.5 * trace_norm_sq(h_umbilical_ref) - 0.5 * zeta_norm_sq(h_umbilical_ref)
        assert tau == pytest.approx(cross, abs=1e-14)

    def test_umbilical_n3(self, umbilical_n3):
        tau = t_scalar(build_T_from_zeta(umbilical_n3))
        assert tau == pytest.approx(3.0, abs=1e-14)
        assert 0.5 * trace_norm_sq(umbilical_n3) - 0.5 * zeta_norm_sq(umbilical_n3) == (
            pytest.approx(3.0, abs=1e-14)
        )

    def test_trace_identity_on_random_instances(self):
        # sum_i Ric_T(e_i) = 2 tau_T
        rng = np.random.default_rng(21)
        for _ in range(50):
            n = int(rng.integers(2, 6))
            zeta = sample_general(rng, n, int(rng.integers(1, 5)))
            tensor = build_T_from_zeta(zeta)
            s = t_ricci_form(tensor)
            assert np.trace(s) == pytest.approx(2.0 * t_scalar(tensor), abs=1e-10)


class TestZetaScalars:
    def test_zero_form(self):
        zeta = BundleValuedForm.zeros(3, 2)
        assert zeta_norm_sq(zeta) == 0.0
        assert np.array_equal(trace_zeta(zeta), np.zeros(2))
        assert trace_norm_sq(zeta) == 0.0

    def test_h_umbilical_values(self, h_umbilical_ref):
        assert_allclose(trace_zeta(h_umbilical_ref), [4.0, 0.0])
        assert trace_norm_sq(h_umbilical_ref) == 16.0
        assert zeta_norm_sq(h_umbilical_ref) == 12.0

    def test_frame_invariance(self):
        rng = np.random.default_rng(33)
        for _ in range(30):
            n, mp = int(rng.integers(2, 6)), int(rng.integers(1, 6))
            zeta = sample_general(rng, n, mp)
            rotated = rotate_frame(
                zeta, random_orthogonal(rng, n), random_orthogonal(rng, mp)
            )
            assert zeta_norm_sq(rotated) == pytest.approx(zeta_norm_sq(zeta), abs=1e-10)
            assert trace_norm_sq(rotated) == pytest.approx(
                trace_norm_sq(zeta), abs=1e-10
            )


class TestRotateFrame:
    def test_identity(self, h_umbilical_ref):
        same = rotate_frame(h_umbilical_ref, np.eye(2), np.eye(2))
        assert_allclose(same.components, h_umbilical_ref.components, atol=0)

    def test_inverse_round_trip(self):
        rng = np.random.default_rng(8)
        zeta = sample_general(rng, 3, 4)
        qt, qb = random_orthogonal(rng, 3), random_orthogonal(rng, 4)
        there = rotate_frame(zeta, qt, qb)
        back = rotate_frame(there, qt.T, qb.T)
        assert_allclose(back.components, zeta.components, atol=1e-12)

    def test_tangent_swap_on_reference(self, h_umbilical_ref):
        swap = np.array([[0.0, 1.0], [1.0, 0.0]])
        rotated = rotate_frame(h_umbilical_ref, swap, np.eye(2))
        assert_allclose(rotated.components[:, 0, 0], [1.0, 0.0])
        assert_allclose(rotated.components[:, 1, 1], [3.0, 0.0])

    def test_rejects_non_orthogonal(self, h_umbilical_ref):
        with pytest.raises(NotOrthogonal):
            rotate_frame(h_umbilical_ref, np.array([[1.0, 0.1], [0.0, 1.0]]), np.eye(2))


class TestFrameHelpers:
    def test_rotation_to_first_axis(self):
        rng = np.random.default_rng(3)
        for m in (1, 2, 5, 9):
            for _ in range(20):
                u = random_unit(rng, m)
                q = rotation_to_first_axis(u)
                assert_allclose(q @ q.T, np.eye(m), atol=1e-12)
                assert_allclose(q @ u, np.eye(m)[0], atol=1e-12)

    def test_orthonormal_complement(self):
        rng = np.random.default_rng(4)
        x = random_unit(rng, 5)
        comp = orthonormal_complement(x)
        assert comp.shape == (4, 5)
        assert_allclose(comp @ x, np.zeros(4), atol=1e-12)
        assert_allclose(comp @ comp.T, np.eye(4), atol=1e-12)


class TestNullSpace:
    def test_zero_form_gives_full_basis(self):
        basis = null_space(BundleValuedForm.zeros(4, 2))
        assert basis.shape == (4, 4)
        assert_allclose(basis @ basis.T, np.eye(4), atol=1e-12)

    def test_kernel_by_inspection(self):
        comps = np.zeros((1, 3, 3))
        comps[0, 1, 1] = 1.0
        basis = null_space(BundleValuedForm(comps))
        # zeta only pairs e2 with e2, so the kernel is span{e1, e3}; e1 must be in it.
        assert basis.shape[0] == 2
        coeffs = basis @ np.eye(3)[0]
        assert np.linalg.norm(coeffs) == pytest.approx(1.0, abs=1e-12)

    def test_single_direction_kernel(self):
        comps = np.zeros((2, 3, 3))
        comps[0, 1, 1] = 1.0
        comps[1, 1, 2] = comps[1, 2, 1] = 2.0
        comps[1, 2, 2] = -1.0
        basis = null_space(BundleValuedForm(comps))
        assert basis.shape == (1, 3)
        assert abs(basis[0] @ np.eye(3)[0]) == pytest.approx(1.0, abs=1e-12)

    def test_h_umbilical_trivial_kernel(self, h_umbilical_ref):
        assert null_space(h_umbilical_ref).shape == (0, 2)

    def test_annihilation_property(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            n = int(rng.integers(2, 6))
            comps = np.array(sample_general(rng, n, 3).components)
            comps[:, 0, :] = 0.0
            comps[:, :, 0] = 0.0
            zeta = BundleValuedForm(comps)
            basis = null_space(zeta)
            assert basis.shape[0] >= 1
            scale = zeta.max_abs()
            for v in basis:
                for _ in range(50):
                    y = rng.standard_normal(n)
                    assert np.linalg.norm(zeta.value(v, y)) <= 1e-8 * scale * max(
                        1.0, np.linalg.norm(y)
                    )


class TestGaussBuiltInvariants:
    def test_pair_exchange_and_symmetries_on_random_instances(self):
        rng = np.random.default_rng(29)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            zeta = sample_general(rng, n, int(rng.integers(1, 2 * n + 3)))
            tensor = build_T_from_zeta(zeta)
            report = validate_curvature_symmetries(tensor, tol=1e-12)
            assert report.passed
            assert pair_exchange_residual(tensor) <= 1e-12

    def test_max_ricci_matches_dense_sampling(self):
        rng = np.random.default_rng(31)
        zeta = sample_general(rng, 4, 5)
        s = t_ricci_form(build_T_from_zeta(zeta))
        lam, vec = max_ricci(s)
        samples = rng.standard_normal((10_000, 4))
        samples /= np.linalg.norm(samples, axis=1)[:, None]
        values = np.einsum("ki,ij,kj->k", samples, s, samples)
        assert values.max() <= lam + 1e-9
        assert float(vec @ s @ vec) == pytest.approx(lam, abs=1e-9)
