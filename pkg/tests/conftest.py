import pytest

from sixsphere.sampling import rng_from_seed


@pytest.fixture
def rng():
    return rng_from_seed(0xC0FFEE)
