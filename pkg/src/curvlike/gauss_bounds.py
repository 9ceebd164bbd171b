"""Curvature-like tensors built from a bundle-valued form via the algebraic
Gauss equation, the two sharp Ricci bounds, and their equality classifiers.

The algebraic Gauss equation couples a symmetric bundle-valued form zeta to a
4-index tensor:

    T(X, Y, Z, W) = <zeta(X, W), zeta(Y, Z)> - <zeta(X, Z), zeta(Y, W)>.

For such a pair the Chen-Ricci inequality bounds Ric_T(X) by
||trace zeta||^2 / 4 for every unit X; when zeta is totally symmetric in the
adapted sense (bundle slot i pairing with tangent index i) the bound sharpens
to (n - 1)/(4n) * ||trace zeta||^2.  Equality across all unit directions
happens only for the zero form or, on surfaces, for the umbilical pattern
(general bound) and the H-umbilical lambda = 3 mu pattern (improved bound).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BundleTooSmall, DimensionMismatch
from .optim_lemmas import jacobi_eigh, max_ricci
from .tensor_core import (
    DEFAULT_TOL,
    BundleValuedForm,
    CurvatureLikeTensor,
    as_unit_vector,
    orthonormal_complement,
    rotate_frame,
    rotation_to_first_axis,
    t_ricci_form,
    trace_norm_sq,
    trace_zeta,
)


class BoundMode(Enum):
    GENERAL = "general"
    IMPROVED = "improved"


class EqualityTag(Enum):
    ZERO_FORM = "zero-form"
    UMBILICAL_SURFACE = "umbilical-surface"
    H_UMBILICAL_SURFACE = "h-umbilical-surface"
    NO_EQUALITY = "no-equality"


@dataclass(frozen=True)
class EqualityClass:
    """Equality-case verdict with witness frames when a pattern is certified.

    ``tangent_frame`` / ``bundle_frame`` rows express the adapted frame in the
    input coordinates; ``mu`` is the H-umbilical parameter (canonicalized to
    mu >= 0).
    """

    tag: EqualityTag
    mu: float | None = None
    tangent_frame: np.ndarray | None = None
    bundle_frame: np.ndarray | None = None


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound evaluation on one form."""

    mode: BoundMode
    bound_value: float
    ricci_max: float
    argmax_direction: np.ndarray
    gap: float
    symmetry_certified: bool
    equality_class: EqualityClass


def _gauss_components(zeta: BundleValuedForm) -> np.ndarray:
    n = zeta.n
    out = np.zeros((n, n, n, n))
    # Accumulating the per-slot difference keeps both antisymmetries and the
    # pair-exchange symmetry bitwise exact.
    for slot in zeta.components:
        out += np.einsum("il,jk->ijkl", slot, slot) - np.einsum(
            "ik,jl->ijkl", slot, slot
        )
    return out


def build_T_from_zeta(zeta: BundleValuedForm) -> CurvatureLikeTensor:
    """Assemble T[i,j,k,l] = sum_r (zeta[r,i,l] zeta[r,j,k] - zeta[r,i,k] zeta[r,j,l]).

    The output satisfies all curvature symmetries by construction.
    """
    return CurvatureLikeTensor(_gauss_components(zeta))


def verify_gauss(tensor: CurvatureLikeTensor, zeta: BundleValuedForm) -> float:
    """Max absolute residual of the algebraic Gauss equation; 0 means the pair
    is exact."""
    if tensor.n != zeta.n:
        raise DimensionMismatch(
            f"tensor dimension {tensor.n} != form dimension {zeta.n}"
        )
    return float(np.abs(tensor.components - _gauss_components(zeta)).max())


def chen_ricci_bound(zeta: BundleValuedForm) -> float:
    """General bound ||trace zeta||^2 / 4, valid for every Gauss pair."""
    return 0.25 * trace_norm_sq(zeta)


def improved_bound(zeta: BundleValuedForm) -> float:
    """Sharpened bound (n - 1)/(4n) * ||trace zeta||^2; a valid claim only
    when the total-symmetry hypothesis is certified."""
    n = zeta.n
    return (n - 1) / (4.0 * n) * trace_norm_sq(zeta)


def is_totally_symmetric(
    zeta: BundleValuedForm, tol: float = DEFAULT_TOL
) -> tuple[bool, float]:
    """Certify the cubic-symmetry hypothesis behind the improved bound.

    Reading bundle slots 0..n-1 as the adapted frame, C[i][j][k] :=
    zeta[i][j][k] must be invariant under all permutations of (i, j, k), and
    every slot past n-1 must vanish.  Returns (verdict, max residual).
    """
    n = zeta.n
    if zeta.m_prime < n:
        raise BundleTooSmall(
            f"total symmetry needs bundle dimension >= {n}, got {zeta.m_prime}"
        )
    cubic = zeta.components[:n]
    residual = 0.0
    for axes in ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        residual = max(residual, float(np.abs(cubic - cubic.transpose(axes)).max()))
    tail = zeta.components[n:]
    if tail.size:
        residual = max(residual, float(np.abs(tail).max()))
    return residual <= tol, residual


def check_bound(
    zeta: BundleValuedForm, mode: BoundMode, tol: float = DEFAULT_TOL
) -> BoundReport:
    """Evaluate one bound end to end: build T, extremize Ric_T, certify the
    hypothesis, classify the equality case.

    The improved bound is still reported when certification fails (the gap may
    then be negative); callers read ``symmetry_certified`` before claiming it.
    """
    tensor = build_T_from_zeta(zeta)
    s_form = t_ricci_form(tensor, tol)
    ricci_max, direction = max_ricci(s_form)
    if mode is BoundMode.GENERAL:
        bound = chen_ricci_bound(zeta)
        certified = True
    else:
        bound = improved_bound(zeta)
        try:
            certified, _ = is_totally_symmetric(zeta, tol)
        except BundleTooSmall:
            certified = False
    return BoundReport(
        mode=mode,
        bound_value=bound,
        ricci_max=ricci_max,
        argmax_direction=direction,
        gap=bound - ricci_max,
        symmetry_certified=certified,
        equality_class=classify_all_equality(zeta, mode, tol),
    )


def _fix_sign(vector: np.ndarray) -> np.ndarray:
    lead = int(np.argmax(np.abs(vector)))
    return -vector if vector[lead] < 0.0 else vector.copy()


def equality_directions(
    zeta: BundleValuedForm, tol: float = DEFAULT_TOL
) -> list[np.ndarray]:
    """Unit directions attaining the general bound, certified pointwise.

    Candidates are eigenvectors of S_T whose eigenvalue matches the bound
    within tol; each must satisfy zeta(X, Y) = 0 for every Y orthogonal to X
    and zeta(X, X) = trace(zeta) / 2.  For the zero form the canonical basis
    is reported.  May be empty.
    """
    n = zeta.n
    if zeta.max_abs() <= tol:
        return [np.eye(n)[i] for i in range(n)]
    bound = chen_ricci_bound(zeta)
    s_form = t_ricci_form(build_T_from_zeta(zeta), tol)
    values, vectors = jacobi_eigh(s_form)
    half_trace = 0.5 * trace_zeta(zeta)
    certified: list[np.ndarray] = []
    for k in range(n):
        if abs(values[k] - bound) > tol:
            continue
        x = vectors[:, k]
        others = (vectors[:, j] for j in range(n) if j != k)
        if any(float(np.linalg.norm(zeta.value(x, y))) > tol for y in others):
            continue
        if float(np.linalg.norm(zeta.value(x, x) - half_trace)) > tol:
            continue
        certified.append(_fix_sign(x))
    return certified


def classify_all_equality(
    zeta: BundleValuedForm, mode: BoundMode, tol: float = DEFAULT_TOL
) -> EqualityClass:
    """Classify equality of the bound across ALL unit directions.

    Equality for every unit X is equivalent to S_T equaling the bound times
    the identity form, which is tested first.  Beyond the zero form, equality
    can only happen on surfaces: the umbilical pattern for the general bound,
    the H-umbilical lambda = 3 mu pattern for the improved one.  Detection
    canonicalizes by rotating the bundle frame so slot 0 carries trace(zeta)
    and diagonalizing the slot-0 quadratic form with descending eigenvalues,
    which also pins mu >= 0.
    """
    n = zeta.n
    bound = chen_ricci_bound(zeta) if mode is BoundMode.GENERAL else improved_bound(zeta)
    s_form = t_ricci_form(build_T_from_zeta(zeta), tol)
    if float(np.abs(s_form - bound * np.eye(n)).max()) > tol:
        return EqualityClass(EqualityTag.NO_EQUALITY)
    if zeta.max_abs() <= tol:
        return EqualityClass(EqualityTag.ZERO_FORM)
    if n != 2:
        return EqualityClass(EqualityTag.NO_EQUALITY)
    trace = trace_zeta(zeta)
    trace_norm = float(np.linalg.norm(trace))
    if trace_norm <= tol:
        return EqualityClass(EqualityTag.NO_EQUALITY)
    u = trace / trace_norm

    if mode is BoundMode.GENERAL:
        quad = np.einsum("rij,r->ij", zeta.components, u)
        _, q_vectors = jacobi_eigh(quad)
        q_tangent = q_vectors.T
        comp = rotate_frame(zeta, q_tangent, np.eye(zeta.m_prime)).components
        umbilical = (
            float(np.abs(comp[:, 0, 1]).max()) <= tol
            and float(np.abs(comp[:, 0, 0] - comp[:, 1, 1]).max()) <= tol
        )
        if umbilical:
            return EqualityClass(
                EqualityTag.UMBILICAL_SURFACE, tangent_frame=q_tangent
            )
        return EqualityClass(EqualityTag.NO_EQUALITY)

    q_bundle = rotation_to_first_axis(u)
    slot_first = rotate_frame(zeta, np.eye(2), q_bundle)
    values, q_vectors = jacobi_eigh(slot_first.components[0])
    order = np.argsort(values)[::-1]
    q_tangent = q_vectors[:, order].T
    comp = rotate_frame(slot_first, q_tangent, np.eye(zeta.m_prime)).components
    mu = trace_norm / 4.0
    pattern = (
        abs(comp[0, 0, 0] - 3.0 * mu) <= tol
        and abs(comp[0, 1, 1] - mu) <= tol
        and abs(comp[0, 0, 1]) <= tol
    )
    if zeta.m_prime > 1:
        tail = comp[1:]
        pattern = (
            pattern
            and float(np.abs(tail[:, 0, 0]).max()) <= tol
            and float(np.abs(tail[:, 1, 1]).max()) <= tol
            and abs(float(np.linalg.norm(tail[:, 0, 1])) - mu) <= tol
        )
    else:
        pattern = pattern and mu <= tol
    if pattern:
        return EqualityClass(
            EqualityTag.H_UMBILICAL_SURFACE,
            mu=mu,
            tangent_frame=q_tangent,
            bundle_frame=q_bundle,
        )
    return EqualityClass(EqualityTag.NO_EQUALITY)


@dataclass(frozen=True)
class CorollaryTriple:
    """Truth values of the three linked statements at one direction.

    ``verified`` says the two-imply-the-third pattern holds, i.e. the truth
    table does not show exactly two of the three statements true.
    """

    equality_at_x: bool
    trace_zero: bool
    in_null_space: bool
    verified: bool


def corollary_triple(
    zeta: BundleValuedForm, x, tol: float = DEFAULT_TOL
) -> CorollaryTriple:
    """Evaluate, at a unit direction X: (a) X attains equality in the general
    bound, (b) trace(zeta) = 0, (c) X lies in the null space of zeta; and
    check that no two of them hold without the third."""
    xv = as_unit_vector(x, zeta.n)
    complement = orthonormal_complement(xv)
    perp_ok = all(
        float(np.linalg.norm(zeta.value(xv, y))) <= tol for y in complement
    )
    half_trace = 0.5 * trace_zeta(zeta)
    half_ok = float(np.linalg.norm(zeta.value(xv, xv) - half_trace)) <= tol
    equality = perp_ok and half_ok
    trace_zero = float(np.sqrt(trace_norm_sq(zeta))) <= tol
    basis = np.eye(zeta.n)
    in_null = all(
        float(np.linalg.norm(zeta.value(xv, basis[j]))) <= tol
        for j in range(zeta.n)
    )
    count = int(equality) + int(trace_zero) + int(in_null)
    return CorollaryTriple(equality, trace_zero, in_null, count != 2)
