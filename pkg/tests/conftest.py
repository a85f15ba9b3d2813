import pytest

from anosovforms.catalog import (
    csig_fixture,
    cubic_pisot_unit,
    cyclic_cubic_datum,
    quartic_z4_datum,
    sqrt2_datum,
)
from anosovforms.numfield import biquadratic_datum


@pytest.fixture(scope="session")
def sqrt2():
    return sqrt2_datum()


@pytest.fixture(scope="session")
def quartic():
    return quartic_z4_datum()


@pytest.fixture(scope="session")
def cubic():
    return cyclic_cubic_datum()


@pytest.fixture(scope="session")
def cubic_unit(cubic):
    return cubic_pisot_unit(cubic)


@pytest.fixture(scope="session")
def biquad52():
    return biquadratic_datum(5, 2)


@pytest.fixture(scope="session")
def csig_pair():
    return csig_fixture()
