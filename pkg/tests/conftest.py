import pytest

from tftkit.ring import DEFAULT_MODULUS, PrimeField


@pytest.fixture(scope="session")
def f17():
    # tiny field, handy for hand-checkable values: 17 - 1 = 2^4
    return PrimeField.from_modulus(17)


@pytest.fixture(scope="session")
def field():
    return PrimeField.from_modulus(DEFAULT_MODULUS)
