"""Shared fixtures: the reference forms used across the suite."""

import numpy as np
import pytest

from curvlike.structures import Family, FamilyParams, construct_family


@pytest.fixture
def h_umbilical_ref():
    """H-umbilical surface with lambda = 3, mu = 1 (improved-bound saturation)."""
    return construct_family(FamilyParams(Family.H_UMBILICAL, n=2, lam=3.0, mu=1.0))


@pytest.fixture
def umbilical_n3():
    """Totally umbilical n = 3 form with unit mean-curvature direction."""
    return construct_family(
        FamilyParams(Family.TOTALLY_UMBILICAL, n=3, h0=np.array([1.0, 0.0, 0.0]))
    )


@pytest.fixture
def umbilical_n2():
    """Totally umbilical surface (general-bound saturation)."""
    return construct_family(
        FamilyParams(Family.TOTALLY_UMBILICAL, n=2, h0=np.array([1.0, 0.0]))
    )
