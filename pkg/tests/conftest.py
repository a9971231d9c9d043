import pytest

from unitgate import NumberField


@pytest.fixture(scope="session")
def rationals():
    """Q presented with minimal polynomial x."""
    return NumberField.from_minpoly([0, 1])


@pytest.fixture(scope="session")
def gauss():
    """Q(i), x^2 + 1."""
    return NumberField.from_minpoly([1, 0, 1])


@pytest.fixture(scope="session")
def omega_field():
    """Q(sqrt(-3)) presented by x^2 + x + 1 (cube roots of unity)."""
    return NumberField.from_minpoly([1, 1, 1])


@pytest.fixture(scope="session")
def cubic_fixture():
    """The totally real cubic x^3 - 6x^2 + 9x - 3 (3 totally ramified,
    18 unit-equation solutions)."""
    return NumberField.from_minpoly([-3, 9, -6, 1])


@pytest.fixture(scope="session")
def cubic_2inert_5eis():
    """x^3 - 15x + 5: totally real, 2 inert, Eisenstein at 5."""
    return NumberField.from_minpoly([5, -15, 0, 1])


@pytest.fixture(scope="session")
def cubic_t23ram():
    """x^3 - 10x + 6: totally real, 2 totally ramified, 3 totally split."""
    return NumberField.from_minpoly([6, -10, 0, 1])


@pytest.fixture(scope="session")
def cubic_5eis():
    """x^3 - 10x + 5: totally real, Eisenstein at 5."""
    return NumberField.from_minpoly([5, -10, 0, 1])


@pytest.fixture(scope="session")
def sqrt7_field():
    """Q(sqrt(7)): 3 splits, 2 ramifies."""
    return NumberField.from_minpoly([-7, 0, 1])


@pytest.fixture(scope="session")
def field_pool(rationals, gauss, omega_field, cubic_fixture, cubic_2inert_5eis, sqrt7_field):
    return [rationals, gauss, omega_field, cubic_fixture, cubic_2inert_5eis, sqrt7_field]
