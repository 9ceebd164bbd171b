"""Constrained quadratic maximization in closed form with an independent
oracle, plus the cyclic-Jacobi eigensolver used to extremize Ricci forms.

Two quadratic families appear in the sharp Ricci bounds:

    f1(a) = a[0] * (a[1] + ... + a[n-1]) - (a[1]^2 + ... + a[n-1]^2)
    f2(a) = a[0] * (a[1] + ... + a[n-1]) - a[0]^2

both maximized over the hyperplane a[0] + ... + a[n-1] = S.  The closed forms
are cross-checked by :func:`brute_force_max`, which eliminates the constraint,
solves the stationarity system and samples the hyperplane at random.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidDimension, LengthMismatch, NoConvergence, ValidationError

ORACLE_SAMPLES = 100_000
ORACLE_SEED = 1849340219

JACOBI_MAX_SWEEPS = 50
JACOBI_OFF_FACTOR = 1e-12


class Objective(Enum):
    F1 = "f1"
    F2 = "f2"


@dataclass(frozen=True)
class ConstrainedQuadratic:
    """One of the two quadratic objectives with its hyperplane constraint sum."""

    which: Objective
    n: int
    constraint_sum: float

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidDimension(f"quadratic families need n >= 2, got {self.n}")


def f_value(problem: ConstrainedQuadratic, a) -> float:
    """Evaluate the objective literally; the constraint is not enforced here."""
    arr = np.asarray(a, dtype=float)
    if arr.shape != (problem.n,):
        raise LengthMismatch(
            f"expected {problem.n} coordinates, got shape {arr.shape}"
        )
    tail = arr[1:]
    if problem.which is Objective.F1:
        return float(arr[0] * tail.sum() - (tail**2).sum())
    return float(arr[0] * tail.sum() - arr[0] ** 2)


@dataclass(frozen=True)
class QuadraticMax:
    max_value: float
    argmax: np.ndarray


def f1_max_closed(n: int, s: float) -> QuadraticMax:
    """Sharp maximum of f1 on the hyperplane: (n-1)/(4n) * S^2, attained at
    a[0] = (n+1)S/(2n) and a[j] = S/(2n) for j >= 1 (the unique maximizer)."""
    if n < 2:
        raise InvalidDimension(f"need n >= 2, got {n}")
    argmax = np.full(n, s / (2.0 * n))
    argmax[0] = (n + 1) * s / (2.0 * n)
    return QuadraticMax((n - 1) / (4.0 * n) * s * s, argmax)


@dataclass(frozen=True)
class F2Family:
    """Maximizer family of f2: a[0] is pinned, only the tail sum is.

    ``representative`` distributes the tail equally, the canonical choice for
    deterministic tests and reports.
    """

    max_value: float
    a1: float
    tail_sum: float
    representative: np.ndarray


def f2_max_closed(n: int, s: float) -> F2Family:
    """Sharp maximum of f2 on the hyperplane: S^2 / 8, attained exactly on the
    family a[0] = S/4, a[1] + ... + a[n-1] = 3S/4."""
    if n < 2:
        raise InvalidDimension(f"need n >= 2, got {n}")
    a1 = s / 4.0
    tail_sum = 3.0 * s / 4.0
    representative = np.full(n, tail_sum / (n - 1))
    representative[0] = a1
    return F2Family(s * s / 8.0, a1, tail_sum, representative)


def brute_force_max(
    problem: ConstrainedQuadratic,
    samples: int = ORACLE_SAMPLES,
    seed: int = ORACLE_SEED,
) -> QuadraticMax:
    """Independent oracle for the constrained maxima.

    Eliminates a[0] = S - sum(tail).  For F1 the reduced objective is strictly
    concave in the tail and the stationarity system 2(I + J) x = S 1 is solved
    by elimination; for F2 the objective depends on the tail only through its
    sum, leaving a concave single-variable quadratic in a[0].  The stationary
    value is then cross-checked against seeded random points on the constraint
    hyperplane; any sampled value above it means the oracle itself is broken.
    """
    n = problem.n
    s = problem.constraint_sum
    if problem.which is Objective.F1:
        system = 2.0 * (np.eye(n - 1) + np.ones((n - 1, n - 1)))
        tail = np.linalg.solve(system, np.full(n - 1, s))
        argmax = np.concatenate(([s - tail.sum()], tail))
    else:
        a1 = s / 4.0
        argmax = np.concatenate(([a1], np.full(n - 1, (s - a1) / (n - 1))))
    best = f_value(problem, argmax)

    rng = np.random.default_rng(seed)
    points = rng.standard_normal((samples, n)) * (1.0 + abs(s))
    points += ((s - points.sum(axis=1)) / n)[:, None]
    tails = points[:, 1:]
    if problem.which is Objective.F1:
        values = points[:, 0] * tails.sum(axis=1) - (tails**2).sum(axis=1)
    else:
        values = points[:, 0] * tails.sum(axis=1) - points[:, 0] ** 2
    sampled_max = float(values.max())
    if sampled_max > best + 1e-9:
        raise ArithmeticError(
            f"oracle self-check failed: sampled {sampled_max!r} exceeds "
            f"stationary value {best!r}"
        )
    return QuadraticMax(best, argmax)


def jacobi_eigh(matrix, sym_tol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """All eigenpairs of a small symmetric matrix by cyclic Jacobi rotations.

    Convergence: off-diagonal Frobenius norm <= 1e-12 * ||A||_F, within at
    most 50 sweeps (NoConvergence otherwise, not expected at n <= 16).
    Returns (eigenvalues, eigenvectors-as-columns), unsorted.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    residual = float(np.abs(a - a.T).max(initial=0.0))
    if residual > sym_tol:
        raise ValidationError(
            f"matrix asymmetric by {residual:.3e} (> {sym_tol})"
        )
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    vectors = np.eye(n)
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        return np.zeros(n), vectors
    target = JACOBI_OFF_FACTOR * norm

    def off(b: np.ndarray) -> float:
        # Sum the off-diagonal entries directly; subtracting the diagonal
        # energy from the total cancels catastrophically near convergence.
        stripped = b.copy()
        np.fill_diagonal(stripped, 0.0)
        return float(np.linalg.norm(stripped))

    for _ in range(JACOBI_MAX_SWEEPS):
        if off(a) <= target:
            return np.diag(a).copy(), vectors
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                root = np.hypot(1.0, tau)  # sqrt(1 + tau^2) without overflow
                if tau >= 0.0:
                    t = 1.0 / (tau + root)
                else:
                    t = 1.0 / (tau - root)
                c = 1.0 / np.sqrt(1.0 + t * t)
                s_ = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s_ * col_q
                a[:, q] = s_ * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s_ * row_q
                a[q, :] = s_ * row_p + c * row_q
                vec_p, vec_q = vectors[:, p].copy(), vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s_ * vec_q
                vectors[:, q] = s_ * vec_p + c * vec_q
    if off(a) <= target:
        return np.diag(a).copy(), vectors
    raise NoConvergence(f"Jacobi sweep limit ({JACOBI_MAX_SWEEPS}) reached")


def max_ricci(s_form) -> tuple[float, np.ndarray]:
    """Largest eigenvalue of a symmetric form with a unit eigenvector.

    Realizes the extremization of Ric_T over unit vectors.  The eigenvector
    sign is fixed so its largest-magnitude coordinate is positive; eigenvalue
    ties resolve to the first index, so the result is deterministic.
    """
    values, vectors = jacobi_eigh(s_form)
    k = int(np.argmax(values))
    direction = vectors[:, k].copy()
    lead = int(np.argmax(np.abs(direction)))
    if direction[lead] < 0.0:
        direction = -direction
    return float(values[k]), direction
