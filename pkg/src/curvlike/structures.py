"""Slant structure models and constructors for the named second-fundamental-
form families.

All adapted-frame families (H-umbilical, slumbilical, H-slumbilical, and the
C-totally real variant) share one component pattern: the geometric meaning of
the normal frame (J e_i, csc(theta) F e_i, or phi e_i) differs, but each frame
is orthonormal, so the pointwise algebra cannot tell them apart.  The ambient
model tag carries the distinction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BundleDimensionMismatch, InvalidParams, OddDimension
from .gauss_bounds import is_totally_symmetric
from .tensor_core import DEFAULT_TOL, BundleValuedForm

LAGRANGIAN_COS_TOL = 1e-12


@dataclass(frozen=True)
class SlantStructure:
    """Tangential part P of the ambient complex structure for slant angle theta.

    ``adapted_normal_gram`` is the Gram matrix of the adapted normal frame
    csc(theta) F e_i, computed from P through <F X, F Y> = <X, Y> - <P X, P Y>;
    it equals the identity exactly when the slant identities hold, which is the
    certification that the adapted frame is orthonormal.
    """

    n: int
    theta: float
    p: np.ndarray
    adapted_normal_gram: np.ndarray


def build_slant_structure(n: int, theta: float) -> SlantStructure:
    """Canonical block model: P e_{2a} = cos(theta) e_{2a+1} and
    P e_{2a+1} = -cos(theta) e_{2a}.

    theta = pi/2 gives P = 0 (the Lagrangian case) and accepts any n; a proper
    slant angle forces even n, since P^2 = -cos^2(theta) I is then a scaled
    complex structure.
    """
    if n < 1:
        raise InvalidParams(f"need n >= 1, got {n}")
    if not 0.0 < theta <= math.pi / 2:
        raise InvalidParams(f"theta must lie in (0, pi/2], got {theta!r}")
    cos_t = math.cos(theta)
    if abs(cos_t) < LAGRANGIAN_COS_TOL:
        cos_t = 0.0
    if cos_t != 0.0 and n % 2 != 0:
        raise OddDimension(
            f"proper slant angle {theta!r} requires even tangent dimension, got {n}"
        )
    p = np.zeros((n, n))
    if cos_t != 0.0:
        for a in range(0, n, 2):
            p[a + 1, a] = cos_t
            p[a, a + 1] = -cos_t
    sin_sq = math.sin(theta) ** 2
    gram = (np.eye(n) - p.T @ p) / sin_sq
    return SlantStructure(n=n, theta=theta, p=p, adapted_normal_gram=gram)


class Family(Enum):
    H_UMBILICAL = "h-umbilical"
    SLUMBILICAL = "slumbilical"
    H_SLUMBILICAL = "h-slumbilical"
    H_UMBILICAL_C_TOTALLY_REAL = "h-umbilical-c-totally-real"
    TOTALLY_UMBILICAL = "totally-umbilical"
    TOTALLY_GEODESIC = "totally-geodesic"


@dataclass(frozen=True)
class FamilyParams:
    """Parameters for one named family; presence rules are family-specific."""

    family: Family
    n: int
    lam: float | None = None
    mu: float | None = None
    theta: float | None = None
    h0: np.ndarray | None = None


_ADAPTED_FAMILIES = (
    Family.H_UMBILICAL,
    Family.SLUMBILICAL,
    Family.H_SLUMBILICAL,
    Family.H_UMBILICAL_C_TOTALLY_REAL,
)

_SLANT_FAMILIES = (Family.SLUMBILICAL, Family.H_SLUMBILICAL)


def construct_family(params: FamilyParams) -> BundleValuedForm:
    """Build the component pattern of a named family in its adapted frame.

    Adapted families use bundle slot i for the i-th adapted normal direction:
    zeta[0][0][0] = lambda, zeta[0][j][j] = mu and zeta[j][0][j] = mu for
    j >= 1, everything else zero.  Slumbilical is the mu = lambda special
    case.  The C-totally real variant carries one extra bundle slot (the
    characteristic direction), identically zero.  Totally umbilical forms are
    zeta[r][i][j] = delta_ij h0[r]; totally geodesic is the zero form.
    """
    n = params.n
    if n < 1:
        raise InvalidParams(f"need n >= 1, got {n}")

    if params.family is Family.TOTALLY_GEODESIC:
        return BundleValuedForm.zeros(n, n)

    if params.family is Family.TOTALLY_UMBILICAL:
        if params.h0 is None:
            raise InvalidParams("totally-umbilical requires h0")
        h0 = np.asarray(params.h0, dtype=float)
        if h0.ndim != 1 or h0.size < 1:
            raise InvalidParams(f"h0 must be a nonempty vector, got shape {h0.shape}")
        components = np.zeros((h0.size, n, n))
        components[:, np.arange(n), np.arange(n)] = h0[:, None]
        return BundleValuedForm(components)

    if params.lam is None:
        raise InvalidParams(f"{params.family.value} requires lambda")
    if params.family is Family.SLUMBILICAL:
        mu = params.lam
    else:
        if params.mu is None:
            raise InvalidParams(f"{params.family.value} requires mu")
        mu = params.mu
    if params.family in _SLANT_FAMILIES and params.theta is not None:
        if not 0.0 < params.theta < math.pi / 2:
            raise InvalidParams(
                f"slant families need theta in (0, pi/2), got {params.theta!r}"
            )

    m_prime = n + 1 if params.family is Family.H_UMBILICAL_C_TOTALLY_REAL else n
    components = np.zeros((m_prime, n, n))
    components[0, 0, 0] = params.lam
    for j in range(1, n):
        components[0, j, j] = mu
        components[j, 0, j] = mu
        components[j, j, 0] = mu
    return BundleValuedForm(components)


def lagrangian_symmetry_check(
    zeta: BundleValuedForm, tol: float = DEFAULT_TOL
) -> tuple[bool, float]:
    """The shape-operator symmetry A_{FX} Y = A_{FY} X as a component test.

    For Lagrangian and slant adapted frames this is exactly total symmetry of
    the cubic form with an empty tail, so the bundle must match the tangent
    dimension.
    """
    if zeta.m_prime != zeta.n:
        raise BundleDimensionMismatch(
            f"Lagrangian-type check needs bundle dimension n = {zeta.n}, "
            f"got {zeta.m_prime}"
        )
    return is_totally_symmetric(zeta, tol)


class RigidityVerdict(Enum):
    FORCED_GEODESIC = "forced-geodesic"
    DIMENSION_1 = "dimension-1"
    SYMMETRIC_NONZERO = "symmetric-nonzero"


def umbilical_rigidity_witness(n: int, h0, tol: float = 1e-12) -> RigidityVerdict:
    """Rigidity of totally umbilical points under the cubic symmetry.

    Builds zeta = g (x) h0 and checks it against total symmetry: for n >= 2 a
    nonzero mean-curvature vector is incompatible with the symmetry, so the
    point is forced geodesic.  DIMENSION_1 is the exceptional n = 1 case;
    SYMMETRIC_NONZERO is the failure verdict that must never occur.
    """
    if n < 1:
        raise InvalidParams(f"need n >= 1, got {n}")
    if n == 1:
        return RigidityVerdict.DIMENSION_1
    h = np.atleast_1d(np.asarray(h0, dtype=float))
    if h.size < n:
        h = np.concatenate([h, np.zeros(n - h.size)])
    zeta = construct_family(FamilyParams(Family.TOTALLY_UMBILICAL, n=n, h0=h))
    symmetric, _ = is_totally_symmetric(zeta, tol)
    if float(np.linalg.norm(h)) <= tol:
        return RigidityVerdict.FORCED_GEODESIC
    if symmetric:
        return RigidityVerdict.SYMMETRIC_NONZERO
    return RigidityVerdict.FORCED_GEODESIC
