"""Exact-symmetry storage and contraction of curvature-like tensors and
bundle-valued symmetric bilinear forms.

Everything here is pointwise linear algebra over dense numpy arrays at desk
scale (tangent dimension <= 16, bundle dimension <= 32).  All values are
immutable after construction and every operation is pure, so instances can be
shared across threads freely.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidDimension,
    InvalidTensor,
    NonOrthonormalPair,
    NotOrthogonal,
    NotUnitVector,
    ValidationError,
)

MAX_TANGENT_DIM = 16
MAX_BUNDLE_DIM = 32

#: Default tolerance for every residual check, overridable per call.
DEFAULT_TOL = 1e-9

UNIT_NORM_TOL = 1e-12
PAIR_ORTHO_TOL = 1e-9
FRAME_ORTHO_TOL = 1e-10
INPUT_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Dimensions:
    """Tangent dimension n and bundle dimension m_prime, with desk-scale guards."""

    n: int
    m_prime: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_TANGENT_DIM:
            raise InvalidDimension(
                f"tangent dimension must be in 1..{MAX_TANGENT_DIM}, got {self.n}"
            )
        if not 1 <= self.m_prime <= MAX_BUNDLE_DIM:
            raise InvalidDimension(
                f"bundle dimension must be in 1..{MAX_BUNDLE_DIM}, got {self.m_prime}"
            )


def mirror_symmetric(components: np.ndarray) -> np.ndarray:
    """Copy the strict upper triangle of each trailing (n, n) slice onto the
    lower triangle, making the pair symmetry bitwise exact."""
    out = np.array(components, dtype=float)
    i_up, j_up = np.triu_indices(out.shape[-1], k=1)
    out[..., j_up, i_up] = out[..., i_up, j_up]
    return out


class BundleValuedForm:
    """Symmetric bilinear form on an n-dimensional tangent space with values in
    an m'-dimensional Riemannian bundle.

    Components are stored as a read-only array ``components[r, i, j]`` with
    ``components[r, i, j] == components[r, j, i]`` bitwise: each unordered pair
    is taken from the upper triangle and mirrored at construction.  Input that
    is asymmetric beyond 1e-12 is rejected.
    """

    __slots__ = ("dims", "components")

    def __init__(self, components) -> None:
        arr = np.asarray(components, dtype=float)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise DimensionMismatch(
                f"expected components of shape (m', n, n), got {arr.shape}"
            )
        dims = Dimensions(n=arr.shape[1], m_prime=arr.shape[0])
        if not np.all(np.isfinite(arr)):
            raise ValidationError("zeta components must be finite")
        asym = np.abs(arr - arr.transpose(0, 2, 1))
        if asym.max(initial=0.0) > INPUT_SYMMETRY_TOL:
            r, i, j = np.unravel_index(int(asym.argmax()), asym.shape)
            raise ValidationError(
                f"zeta[{r}][{i}][{j}] = {float(arr[r, i, j])!r} differs from "
                f"zeta[{r}][{j}][{i}] = {float(arr[r, j, i])!r}"
            )
        sym = mirror_symmetric(arr)
        sym.setflags(write=False)
        self.dims = dims
        self.components = sym

    @classmethod
    def zeros(cls, n: int, m_prime: int) -> "BundleValuedForm":
        return cls(np.zeros((m_prime, n, n)))

    @property
    def n(self) -> int:
        return self.dims.n

    @property
    def m_prime(self) -> int:
        return self.dims.m_prime

    def value(self, x, y) -> np.ndarray:
        """Bundle vector zeta(X, Y)."""
        return np.einsum("rij,i,j->r", self.components, x, y)

    def max_abs(self) -> float:
        return float(np.abs(self.components).max())


class CurvatureLikeTensor:
    """Dense 4-index tensor expected to carry the curvature symmetries.

    Construction does not validate the symmetries; builders guarantee them and
    user-supplied tensors go through :func:`validate_curvature_symmetries`.
    """

    __slots__ = ("n", "components")

    def __init__(self, components) -> None:
        arr = np.array(np.asarray(components, dtype=float))
        if arr.ndim != 4 or len(set(arr.shape)) != 1:
            raise DimensionMismatch(
                f"expected components of shape (n, n, n, n), got {arr.shape}"
            )
        if not 1 <= arr.shape[0] <= MAX_TANGENT_DIM:
            raise InvalidDimension(
                f"tangent dimension must be in 1..{MAX_TANGENT_DIM}, got {arr.shape[0]}"
            )
        arr.setflags(write=False)
        self.n = arr.shape[0]
        self.components = arr

    @classmethod
    def zeros(cls, n: int) -> "CurvatureLikeTensor":
        return cls(np.zeros((n, n, n, n)))


@dataclass(frozen=True)
class SymmetryReport:
    """Max absolute violation of each curvature identity, with a verdict."""

    skew_first_pair: float
    skew_second_pair: float
    first_bianchi: float
    tol: float
    passed: bool

    @property
    def max_residual(self) -> float:
        return max(self.skew_first_pair, self.skew_second_pair, self.first_bianchi)


def validate_curvature_symmetries(
    tensor: CurvatureLikeTensor, tol: float = DEFAULT_TOL
) -> SymmetryReport:
    """Measure T(X,Y,Z,W) = -T(Y,X,Z,W), T(X,Y,Z,W) = -T(X,Y,W,Z) and the
    first Bianchi sum T(X,Y,Z,W) + T(X,Z,W,Y) + T(X,W,Y,Z) = 0 over all index
    quadruples; passes iff every residual is <= tol."""
    a = tensor.components
    skew_xy = float(np.abs(a + np.einsum("jikl->ijkl", a)).max())
    skew_zw = float(np.abs(a + np.einsum("ijlk->ijkl", a)).max())
    bianchi = float(
        np.abs(a + np.einsum("iklj->ijkl", a) + np.einsum("iljk->ijkl", a)).max()
    )
    passed = skew_xy <= tol and skew_zw <= tol and bianchi <= tol
    return SymmetryReport(skew_xy, skew_zw, bianchi, tol, passed)


def pair_exchange_residual(tensor: CurvatureLikeTensor) -> float:
    """Max violation of T(X,Y,Z,W) = T(Z,W,X,Y), a consequence of the three
    curvature identities."""
    a = tensor.components
    return float(np.abs(a - np.einsum("klij->ijkl", a)).max())


def as_unit_vector(x, n: int) -> np.ndarray:
    """Validate a unit tangent vector: length n, Euclidean norm 1 within 1e-12."""
    arr = np.asarray(x, dtype=float)
    if arr.shape != (n,):
        raise DimensionMismatch(f"expected a vector of length {n}, got shape {arr.shape}")
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise NotUnitVector(f"norm {norm!r} differs from 1 beyond {UNIT_NORM_TOL}")
    return arr


def t_sectional(tensor: CurvatureLikeTensor, x, y) -> float:
    """Sectional value K_T(X ^ Y) = T(X, Y, Y, X) for an orthonormal pair."""
    xv = as_unit_vector(x, tensor.n)
    yv = as_unit_vector(y, tensor.n)
    inner = float(xv @ yv)
    if abs(inner) > PAIR_ORTHO_TOL:
        raise NonOrthonormalPair(f"<X, Y> = {inner!r} exceeds {PAIR_ORTHO_TOL}")
    return float(np.einsum("ijkl,i,j,k,l->", tensor.components, xv, yv, yv, xv))


def t_ricci_form(tensor: CurvatureLikeTensor, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Ricci-type contraction S_T[i, k] = sum_j T[j, i, k, j], symmetrized to
    kill roundoff.  Raises InvalidTensor if the curvature symmetries fail."""
    report = validate_curvature_symmetries(tensor, tol)
    if not report.passed:
        raise InvalidTensor(
            f"curvature symmetries violated (max residual {report.max_residual:.3e} "
            f"> tol {tol:.3e})"
        )
    s = np.einsum("jikj->ik", tensor.components)
    return 0.5 * (s + s.T)


def t_ricci(tensor: CurvatureLikeTensor, x, tol: float = DEFAULT_TOL) -> float:
    """Ricci value Ric_T(X) = S_T(X, X) for a unit vector X."""
    xv = as_unit_vector(x, tensor.n)
    s = t_ricci_form(tensor, tol)
    return float(xv @ s @ xv)


def t_scalar(tensor: CurvatureLikeTensor, tol: float = DEFAULT_TOL) -> float:
    """Scalar value tau_T = sum over i < j of K_T(e_i ^ e_j)."""
    report = validate_curvature_symmetries(tensor, tol)
    if not report.passed:
        raise InvalidTensor(
            f"curvature symmetries violated (max residual {report.max_residual:.3e} "
            f"> tol {tol:.3e})"
        )
    i_up, j_up = np.triu_indices(tensor.n, k=1)
    return float(tensor.components[i_up, j_up, j_up, i_up].sum())


def zeta_norm_sq(zeta: BundleValuedForm) -> float:
    """Squared norm ||zeta||^2 = sum of all squared components."""
    return float((zeta.components**2).sum())


def trace_zeta(zeta: BundleValuedForm) -> np.ndarray:
    """Bundle vector trace(zeta) = sum_i zeta(e_i, e_i)."""
    return np.einsum("rii->r", zeta.components)


def trace_norm_sq(zeta: BundleValuedForm) -> float:
    """Squared norm of the trace bundle vector."""
    t = trace_zeta(zeta)
    return float(t @ t)


def _require_orthogonal(q, size: int, name: str) -> np.ndarray:
    arr = np.asarray(q, dtype=float)
    if arr.shape != (size, size):
        raise DimensionMismatch(
            f"{name} rotation must have shape ({size}, {size}), got {arr.shape}"
        )
    residual = float(np.abs(arr.T @ arr - np.eye(size)).max())
    if residual > FRAME_ORTHO_TOL:
        raise NotOrthogonal(
            f"{name} rotation fails Q^T Q = I by {residual:.3e} (> {FRAME_ORTHO_TOL})"
        )
    return arr


def rotate_frame(zeta: BundleValuedForm, q_tangent, q_bundle) -> BundleValuedForm:
    """Push zeta through orthogonal changes of the tangent and bundle frames:
    zeta'[s, a, b] = sum Q_b[s, r] Q_t[a, i] Q_t[b, j] zeta[r, i, j]."""
    qt = _require_orthogonal(q_tangent, zeta.n, "tangent")
    qb = _require_orthogonal(q_bundle, zeta.m_prime, "bundle")
    rotated = np.einsum("sr,ai,bj,rij->sab", qb, qt, qt, zeta.components)
    return BundleValuedForm(mirror_symmetric(rotated))


def rotation_to_first_axis(u: np.ndarray) -> np.ndarray:
    """Deterministic orthogonal Q with Q @ u = e_0, for a unit vector u.

    Householder-based; the reflection direction is chosen by the sign of u[0]
    so the construction never cancels.
    """
    m = u.shape[0]
    e0 = np.zeros(m)
    e0[0] = 1.0
    if u[0] >= 0.0:
        v = u + e0
        q = np.eye(m) - 2.0 * np.outer(v, v) / float(v @ v)
        q[0, :] = -q[0, :]
    else:
        v = u - e0
        q = np.eye(m) - 2.0 * np.outer(v, v) / float(v @ v)
    return q


def orthonormal_complement(x: np.ndarray) -> np.ndarray:
    """Rows form an orthonormal basis of the hyperplane orthogonal to unit x."""
    return rotation_to_first_axis(x)[1:]


def null_space(zeta: BundleValuedForm, rank_tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis (rows) of N_zeta = {X : zeta(X, Y) = 0 for all Y}.

    The components are stacked into an (m' * n) x n matrix whose kernel is
    N_zeta; singular values below rank_tol times the largest absolute
    component are treated as zero.  Returns a (k, n) array, possibly empty.
    """
    if rank_tol <= 0:
        raise ValidationError(f"rank_tol must be positive, got {rank_tol!r}")
    scale = zeta.max_abs()
    if scale == 0.0:
        return np.eye(zeta.n)
    stacked = zeta.components.reshape(zeta.m_prime * zeta.n, zeta.n)
    _, singular, vt = np.linalg.svd(stacked)
    rank = int((singular > rank_tol * scale).sum())
    return vt[rank:].copy()
