"""Session-scoped caches for the expensive objects shared across test modules."""

import pytest

from nestsqs.boolean import affine_orbit_decomposition, nested_boolean_sqs
from nestsqs.fields import Gf2mField


@pytest.fixture(scope="session")
def field_for():
    cache = {}

    def get(m: int) -> Gf2mField:
        if m not in cache:
            cache[m] = Gf2mField(m)
        return cache[m]

    return get


@pytest.fixture(scope="session")
def boolean_sqs_for(field_for):
    cache = {}

    def get(m: int):
        if m not in cache:
            cache[m] = nested_boolean_sqs(field_for(m))
        return cache[m]

    return get


@pytest.fixture(scope="session")
def orbits_for(field_for):
    cache = {}

    def get(m: int):
        if m not in cache:
            cache[m] = affine_orbit_decomposition(field_for(m))
        return cache[m]

    return get
