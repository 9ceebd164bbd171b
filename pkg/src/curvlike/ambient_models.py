"""Ambient space-form models as Ricci offsets.

Each model contributes a constant Delta with Ric(X) = Ric_T(X) + Delta for all
unit X, where T is the Gauss-built tensor of the second fundamental form.  The
full ambient curvature tensors are folded into these constants: for a slant
submanifold the tangential-structure terms contribute exactly
-3c cos^2(theta)/4 to the Ricci contraction (skewness of P kills the mixed
terms and sum_j <P e_j, X>^2 = cos^2(theta) for unit X), so only the offset
survives at the pointwise level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidDimension, InvalidParams
from .gauss_bounds import build_T_from_zeta, chen_ricci_bound, improved_bound
from .tensor_core import DEFAULT_TOL, BundleValuedForm, t_ricci, trace_norm_sq


class AmbientKind(Enum):
    REAL_SPACE_FORM = "real_space_form"
    COMPLEX_LAGRANGIAN = "complex_lagrangian"
    COMPLEX_SLANT = "complex_slant"
    SASAKIAN_C_TOTALLY_REAL = "sasakian_c_totally_real"


@dataclass(frozen=True)
class AmbientModel:
    """Tagged constant-curvature ambient model; theta only for the slant kind."""

    kind: AmbientKind
    c: float
    theta: float | None = None

    def __post_init__(self) -> None:
        if self.kind is AmbientKind.COMPLEX_SLANT:
            if self.theta is None:
                raise InvalidParams("complex_slant requires theta")
            if not 0.0 < self.theta <= math.pi / 2:
                raise InvalidParams(
                    f"theta must lie in (0, pi/2], got {self.theta!r}"
                )
        elif self.theta is not None:
            raise InvalidParams("theta is only valid for complex_slant models")


def _cos_sq(theta: float) -> float:
    """cos^2(theta), snapped to 0 at theta = pi/2 so the slant kind degenerates
    to the Lagrangian kind exactly."""
    cos_t = math.cos(theta)
    if abs(cos_t) < 1e-12:
        return 0.0
    return cos_t * cos_t


def ricci_offset(model: AmbientModel, n: int) -> float:
    """Constant Delta in Ric(X) = Ric_T(X) + Delta for unit X."""
    if n < 2:
        raise InvalidDimension(f"need tangent dimension >= 2, got {n}")
    if model.kind is AmbientKind.REAL_SPACE_FORM:
        return (n - 1) * model.c
    if model.kind is AmbientKind.COMPLEX_LAGRANGIAN:
        return 0.25 * (n - 1) * model.c
    if model.kind is AmbientKind.COMPLEX_SLANT:
        return 0.25 * (n - 1) * model.c + 0.75 * model.c * _cos_sq(model.theta)
    return 0.25 * (n - 1) * (model.c + 3.0)


def mean_curvature_sq(zeta: BundleValuedForm) -> float:
    """Squared mean curvature ||H||^2 with H = trace(zeta) / n."""
    return trace_norm_sq(zeta) / float(zeta.n) ** 2


def application_bound(model: AmbientModel, zeta: BundleValuedForm) -> float:
    """Model-themed right-hand side of the Ricci bound.

    Written exactly as the geometric statements display it, so agreement with
    bound-plus-offset is a genuine transcription check:

        real space form:        n^2 ||H||^2 / 4 + (n-1) c
        complex Lagrangian:     (n-1)/4 * (c + n ||H||^2)
        complex slant:          1/4 * ((n-1) n ||H||^2 + (n-1) c + 3 c cos^2 theta)
        Sasakian C-totally real:(n-1)/4 * (c + 3 + n ||H||^2)
    """
    n = zeta.n
    if n < 2:
        raise InvalidDimension(f"need tangent dimension >= 2, got {n}")
    h_sq = mean_curvature_sq(zeta)
    if model.kind is AmbientKind.REAL_SPACE_FORM:
        return n * n * h_sq / 4.0 + (n - 1) * model.c
    if model.kind is AmbientKind.COMPLEX_LAGRANGIAN:
        return (n - 1) / 4.0 * (model.c + n * h_sq)
    if model.kind is AmbientKind.COMPLEX_SLANT:
        return 0.25 * (
            (n - 1) * n * h_sq + (n - 1) * model.c + 3.0 * model.c * _cos_sq(model.theta)
        )
    return (n - 1) / 4.0 * (model.c + 3.0 + n * h_sq)


def base_bound(model: AmbientModel, zeta: BundleValuedForm) -> float:
    """The abstract bound the model's statement rests on: general for the real
    space form, improved for the other three."""
    if model.kind is AmbientKind.REAL_SPACE_FORM:
        return chen_ricci_bound(zeta)
    return improved_bound(zeta)


def intrinsic_ricci(
    model: AmbientModel, zeta: BundleValuedForm, x, tol: float = DEFAULT_TOL
) -> float:
    """Ric(X) recovered from the Gauss-built tensor plus the model offset."""
    tensor = build_T_from_zeta(zeta)
    return t_ricci(tensor, np.asarray(x, dtype=float), tol) + ricci_offset(
        model, zeta.n
    )
