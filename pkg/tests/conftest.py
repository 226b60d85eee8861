import pytest

from hypgen import make_spec


@pytest.fixture(scope="session")
def example_spec():
    """The main worked generator: mixed-sign zeros, sign exponent -1."""
    return make_spec([-2, 1, 2, 4], [-1, 3, 5], 3)


@pytest.fixture(scope="session")
def interlaced_spec():
    """Interlacing positive zeros: the hypothesis checks must reject this."""
    return make_spec([1, 3, 5], [2, 4], 3)


@pytest.fixture(scope="session")
def positive_z_spec():
    """Even sign exponent, so the curve parameterization is positive."""
    return make_spec([1, 2, 3], [-3, 4], 3)


@pytest.fixture(scope="session")
def separated_spec():
    """Fully separated zeros (P positive, Q negative): every weight term
    is positive, so all four hypotheses hold trivially."""
    return make_spec([1, 2, 3], [-1, -2], 2)
