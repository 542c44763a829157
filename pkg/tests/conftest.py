import pytest
from hypothesis import settings

from gmoat import sieve_octant

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def set100():
    return sieve_octant(100, include_axes=False)


@pytest.fixture(scope="session")
def set1k():
    return sieve_octant(1_000, include_axes=False)


@pytest.fixture(scope="session")
def set10k():
    return sieve_octant(10_000, include_axes=False)
