import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hoicov.linalg import FieldKind, HermitianMatrix
from hoicov.oracles import random_pd_matrix

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# Hand-checked 3x3 fixtures used throughout: both have det S = 1.
# Common driver: x0 drives x1 and x2 (redundant triad).
COMMON_DRIVER = [[1.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]
# Collider: x2 = x0 + x1 + noise with independent x0, x1 (synergistic triad).
COLLIDER = [[1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [1.0, 1.0, 3.0]]


@pytest.fixture
def common_driver() -> HermitianMatrix:
    return HermitianMatrix.from_real(COMMON_DRIVER)


@pytest.fixture
def collider() -> HermitianMatrix:
    return HermitianMatrix.from_real(COLLIDER)


def pd_corpus(n, seed, p_range=(2, 10)):
    """Seeded random PD matrices alternating real/complex kinds."""
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for j in range(n):
        p = int(rng.integers(p_range[0], p_range[1] + 1))
        kind = FieldKind.REAL if j % 2 == 0 else FieldKind.COMPLEX
        out.append(random_pd_matrix(p, kind, rng))
    return out
