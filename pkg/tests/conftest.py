import pytest

from tritcodes import build_code, make_field, spectral_enumerator


@pytest.fixture(scope="session")
def ctx3():
    return make_field(3)


@pytest.fixture(scope="session")
def ctx5():
    return make_field(5)


@pytest.fixture(scope="session")
def ctx7():
    return make_field(7)


@pytest.fixture(scope="session")
def ctx9():
    return make_field(9)


@pytest.fixture(scope="session")
def code3(ctx3):
    return build_code(ctx3)


@pytest.fixture(scope="session")
def code5(ctx5):
    return build_code(ctx5)


@pytest.fixture(scope="session")
def code7(ctx7):
    return build_code(ctx7)


@pytest.fixture(scope="session")
def enum5(ctx5):
    return spectral_enumerator(ctx5, workers=2)


@pytest.fixture(scope="session")
def enum7(ctx7):
    return spectral_enumerator(ctx7, workers=2)


@pytest.fixture(scope="session")
def enum9(ctx9):
    return spectral_enumerator(ctx9, workers=4)


# Paper fixture values, ascending trit lists.
GEN_M5 = (2, 2, 0, 1, 0, 2, 2, 0, 2, 1, 1)
GEN_M7 = (2, 1, 1, 1, 0, 2, 0, 2, 2, 1, 1, 0, 2, 0, 1)
GEN_M9 = (2, 1, 1, 0, 2, 1, 2, 0, 1, 0, 2, 2, 1, 0, 1, 0, 1, 2, 1)

ENUM_M5 = {0: 1, 144: 2420, 153: 12100, 162: 34364, 171: 7744, 180: 2420}
ENUM_M7 = {
    0: 1,
    1404: 153020,
    1431: 1040536,
    1458: 2513900,
    1485: 922492,
    1512: 153020,
}
ENUM_M9 = {
    0: 1,
    12960: 10628280,
    13041: 88214724,
    13122: 192922964,
    13203: 85026240,
    13284: 10628280,
}
