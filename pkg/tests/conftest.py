import pytest

from int2gc.fixtures import example_context, example_lattice, three_chain_algebra


@pytest.fixture(scope="session")
def three_chain():
    return three_chain_algebra()


@pytest.fixture(scope="session")
def lattice5():
    return example_lattice()


@pytest.fixture(scope="session")
def ctx34():
    return example_context()
