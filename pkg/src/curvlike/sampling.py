"""Seeded random instance generation shared by the CLI and the test suite.

All draws go through numpy's PCG64 generator (``np.random.default_rng``), a
documented portable 64-bit PRNG: a fixed seed reproduces the same instances
byte for byte.
"""

from __future__ import annotations

import numpy as np

from .errors import BundleTooSmall
from .tensor_core import BundleValuedForm

PRNG_NAME = "numpy-pcg64"


def sample_general(rng: np.random.Generator, n: int, m_prime: int) -> BundleValuedForm:
    """Unrestricted form: i.i.d. standard normals symmetrized in the tangent pair."""
    raw = rng.standard_normal((m_prime, n, n))
    return BundleValuedForm(0.5 * (raw + raw.transpose(0, 2, 1)))


def sample_symmetric(
    rng: np.random.Generator, n: int, m_prime: int
) -> BundleValuedForm:
    """Totally symmetric form: a random 3-index array averaged over all six
    index permutations fills bundle slots 0..n-1; the tail stays zero."""
    if m_prime < n:
        raise BundleTooSmall(
            f"totally symmetric forms need bundle dimension >= {n}, got {m_prime}"
        )
    raw = rng.standard_normal((n, n, n))
    cubic = (
        raw
        + raw.transpose(0, 2, 1)
        + raw.transpose(1, 0, 2)
        + raw.transpose(1, 2, 0)
        + raw.transpose(2, 0, 1)
        + raw.transpose(2, 1, 0)
    ) / 6.0
    components = np.zeros((m_prime, n, n))
    components[:n] = cubic
    return BundleValuedForm(components)


def random_unit(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform random unit vector."""
    v = rng.standard_normal(n)
    return v / np.linalg.norm(v)


def random_orthogonal(rng: np.random.Generator, k: int) -> np.ndarray:
    """Haar-ish random orthogonal matrix via QR with a deterministic sign fix."""
    a = rng.standard_normal((k, k))
    q, r = np.linalg.qr(a)
    signs = np.where(np.diag(r) < 0.0, -1.0, 1.0)
    return q * signs
