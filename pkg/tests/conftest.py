import random

import pytest

from pbcap.pairing import Bn256Suite, MockSuite


@pytest.fixture(scope="session")
def mock_suite():
    return MockSuite()


@pytest.fixture(scope="session")
def prod_suite():
    return Bn256Suite()


@pytest.fixture(scope="session", params=["mock", "production"])
def any_suite(request, mock_suite, prod_suite):
    return mock_suite if request.param == "mock" else prod_suite


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
