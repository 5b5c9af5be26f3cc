import pytest
from hypothesis import settings

from phisystems.arith import PrimePi, build_spf

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")

TABLE_LIMIT = 50_000


@pytest.fixture(scope="session")
def table():
    return build_spf(TABLE_LIMIT).warm(nu=True)


@pytest.fixture(scope="session")
def pi(table):
    return PrimePi.from_spf(table)
