"""Unit tests for the ambient offsets and the themed Ricci bounds."""

import math

import numpy as np
import pytest

from curvlike.ambient_models import (
    AmbientKind,
    AmbientModel,
    application_bound,
    base_bound,
    intrinsic_ricci,
    mean_curvature_sq,
    ricci_offset,
)
from curvlike.errors import InvalidDimension, InvalidParams
from curvlike.gauss_bounds import build_T_from_zeta, chen_ricci_bound, improved_bound
from curvlike.optim_lemmas import max_ricci
from curvlike.sampling import random_unit, sample_general, sample_symmetric
from curvlike.structures import build_slant_structure
from curvlike.tensor_core import BundleValuedForm, t_ricci_form

THETAS = (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2)


def _models(rng):
    c = float(rng.uniform(-5.0, 5.0))
    theta = float(rng.uniform(0.1, math.pi / 2))
    yield AmbientModel(AmbientKind.COMPLEX_LAGRANGIAN, c)
    yield AmbientModel(AmbientKind.COMPLEX_SLANT, c, theta)
    yield AmbientModel(AmbientKind.SASAKIAN_C_TOTALLY_REAL, c)


class TestModelValidation:
    def test_slant_requires_theta(self):
        with pytest.raises(InvalidParams):
            AmbientModel(AmbientKind.COMPLEX_SLANT, 1.0)

    def test_theta_range(self):
        with pytest.raises(InvalidParams):
            AmbientModel(AmbientKind.COMPLEX_SLANT, 1.0, theta=0.0)
        with pytest.raises(InvalidParams):
            AmbientModel(AmbientKind.COMPLEX_SLANT, 1.0, theta=math.pi / 2 + 0.1)

    def test_theta_rejected_elsewhere(self):
        with pytest.raises(InvalidParams):
            AmbientModel(AmbientKind.REAL_SPACE_FORM, 1.0, theta=1.0)


class TestRicciOffset:
    def test_sasakian_flat_case(self):
        model = AmbientModel(AmbientKind.SASAKIAN_C_TOTALLY_REAL, -3.0)
        for n in (2, 3, 7):
            assert ricci_offset(model, n) == 0.0

    def test_slant_arithmetic(self):
        model = AmbientModel(AmbientKind.COMPLEX_SLANT, 4.0, theta=math.pi / 3)
        assert ricci_offset(model, 2) == pytest.approx(1.75, abs=1e-12)

    def test_slant_at_right_angle_equals_lagrangian_exactly(self):
        rng = np.random.default_rng(71)
        for n in (2, 3, 5):
            zeta = sample_general(rng, n, n)
            for c in (-2.0, 0.0, 4.0):
                slant = AmbientModel(AmbientKind.COMPLEX_SLANT, c, theta=math.pi / 2)
                lag = AmbientModel(AmbientKind.COMPLEX_LAGRANGIAN, c)
                assert ricci_offset(slant, n) == ricci_offset(lag, n)
                assert application_bound(slant, zeta) == application_bound(lag, zeta)
                x = random_unit(rng, n)
                assert intrinsic_ricci(slant, zeta, x) == intrinsic_ricci(lag, zeta, x)

    def test_real_space_form(self):
        model = AmbientModel(AmbientKind.REAL_SPACE_FORM, 2.0)
        assert ricci_offset(model, 4) == 6.0

    def test_dimension_guard(self):
        with pytest.raises(InvalidDimension):
            ricci_offset(AmbientModel(AmbientKind.REAL_SPACE_FORM, 1.0), 1)


class TestApplicationBound:
    def test_lagrangian_reference(self, h_umbilical_ref):
        model = AmbientModel(AmbientKind.COMPLEX_LAGRANGIAN, 0.0)
        assert mean_curvature_sq(h_umbilical_ref) == 4.0
        assert application_bound(model, h_umbilical_ref) == pytest.approx(2.0, abs=1e-12)

    def test_sasakian_zero_form(self):
        model = AmbientModel(AmbientKind.SASAKIAN_C_TOTALLY_REAL, 1.0)
        zeta = BundleValuedForm.zeros(2, 3)
        assert application_bound(model, zeta) == pytest.approx(1.0, abs=1e-15)

    def test_flat_zero_form(self):
        # The flat parameter is c = 0 except for the Sasakian kind, whose
        # curvature enters as c + 3.
        zeta = BundleValuedForm.zeros(3, 2)
        flat = [
            AmbientModel(AmbientKind.REAL_SPACE_FORM, 0.0),
            AmbientModel(AmbientKind.COMPLEX_LAGRANGIAN, 0.0),
            AmbientModel(AmbientKind.COMPLEX_SLANT, 0.0, theta=0.5),
            AmbientModel(AmbientKind.SASAKIAN_C_TOTALLY_REAL, -3.0),
        ]
        for model in flat:
            assert application_bound(model, zeta) == 0.0

    def test_decomposes_into_bound_plus_offset(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            zeta = sample_symmetric(rng, n, n)
            for model in _models(rng):
                lhs = application_bound(model, zeta)
                rhs = improved_bound(zeta) + ricci_offset(model, n)
                assert abs(lhs - rhs) <= 1e-12
        zeta = sample_general(rng, 4, 5)
        model = AmbientModel(AmbientKind.REAL_SPACE_FORM, 1.5)
        assert abs(
            application_bound(model, zeta)
            - (chen_ricci_bound(zeta) + ricci_offset(model, 4))
        ) <= 1e-12


class TestIntrinsicRicci:
    def test_totally_geodesic_lagrangian(self):
        model = AmbientModel(AmbientKind.COMPLEX_LAGRANGIAN, 4.0)
        zeta = BundleValuedForm.zeros(3, 3)
        for x in np.eye(3):
            assert intrinsic_ricci(model, zeta, x) == pytest.approx(2.0, abs=1e-15)

    def test_flat_sasakian_zero(self):
        model = AmbientModel(AmbientKind.SASAKIAN_C_TOTALLY_REAL, -3.0)
        zeta = BundleValuedForm.zeros(2, 3)
        assert intrinsic_ricci(model, zeta, [1.0, 0.0]) == 0.0

    def test_reference_instance(self, h_umbilical_ref):
        model = AmbientModel(AmbientKind.COMPLEX_LAGRANGIAN, 0.0)
        assert intrinsic_ricci(model, h_umbilical_ref, [1.0, 0.0]) == pytest.approx(
            2.0, abs=1e-12
        )

    def test_bounded_by_application_bound(self):
        rng = np.random.default_rng(41)
        for _ in range(60):
            n = int(rng.integers(2, 6))
            zeta = sample_symmetric(rng, n, n)
            x = random_unit(rng, n)
            for model in _models(rng):
                assert intrinsic_ricci(model, zeta, x) <= (
                    application_bound(model, zeta) + 1e-9
                )

    def test_real_space_form_recovery(self):
        rng = np.random.default_rng(43)
        for _ in range(60):
            n = int(rng.integers(2, 6))
            zeta = sample_general(rng, n, int(rng.integers(1, 2 * n + 3)))
            model = AmbientModel(AmbientKind.REAL_SPACE_FORM, float(rng.uniform(-3, 3)))
            lam, _ = max_ricci(t_ricci_form(build_T_from_zeta(zeta)))
            intrinsic_max = lam + ricci_offset(model, n)
            expected = n * n * mean_curvature_sq(zeta) / 4.0 + (n - 1) * model.c
            assert intrinsic_max <= expected + 1e-9


class TestSlantCurvatureTermFoldsIntoOffset:
    """The tangential-structure terms of the slant ambient curvature reduce to
    the constant -3 c cos^2(theta) / 4 on the Ricci contraction."""

    @pytest.mark.parametrize("n", (2, 4, 6))
    @pytest.mark.parametrize("theta", THETAS)
    def test_p_term_ricci_contraction(self, n, theta):
        structure = build_slant_structure(n, theta)
        p = structure.p
        rng = np.random.default_rng(47)
        c = 4.0
        for _ in range(20):
            x = random_unit(rng, n)
            basis = np.eye(n)
            total = 0.0
            for j in range(n):
                e = basis[j]
                # tangential terms of the ambient curvature, contracted as a
                # Ricci sum: <P e_j, X><P X, e_j> - <P X, X><P e_j, e_j>
                #            + 2 <P e_j, X><P X, e_j>
                total += (p @ e) @ x * ((p @ x) @ e) - ((p @ x) @ x) * ((p @ e) @ e)
                total += 2.0 * ((p @ e) @ x) * ((p @ x) @ e)
            contribution = (c / 4.0) * total
            assert contribution == pytest.approx(
                -0.75 * c * math.cos(theta) ** 2, abs=1e-12
            )


class TestBaseBound:
    def test_kind_selects_bound(self, h_umbilical_ref):
        real = AmbientModel(AmbientKind.REAL_SPACE_FORM, 0.0)
        lag = AmbientModel(AmbientKind.COMPLEX_LAGRANGIAN, 0.0)
        assert base_bound(real, h_umbilical_ref) == chen_ricci_bound(h_umbilical_ref)
        assert base_bound(lag, h_umbilical_ref) == improved_bound(h_umbilical_ref)
