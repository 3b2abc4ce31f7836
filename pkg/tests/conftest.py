import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from detscheme import DegreeData, PrimeField

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    max_examples=100,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


E1 = DegreeData(4, (1, 1, 1), (0, 0))
E2 = DegreeData(4, (1, 1, 1, 1), (0, 0, 0))
E3 = DegreeData(5, (1, 1, 1, 1), (0, 0))
MIXED_C2 = DegreeData(5, (1, 1, 2), (0, 0))
MIXED_C3 = DegreeData(6, (1, 1, 1, 2), (0, 0))


@pytest.fixture(scope="session")
def field():
    return PrimeField()


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260810)
