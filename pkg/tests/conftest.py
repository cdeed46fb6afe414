import pytest

from transop import Lattice
from transop.systemio import fixture_path, load_system


@pytest.fixture(scope="session")
def firefly():
    return load_system(fixture_path("firefly.system"))


@pytest.fixture(scope="session")
def firefly3():
    return load_system(fixture_path("firefly3.system"))


@pytest.fixture(scope="session")
def firefly_r2():
    return load_system(fixture_path("firefly-r2.system"))


@pytest.fixture(scope="session")
def firefly_lattice(firefly):
    """The twelve firefly propositions as a lattice in their own right."""
    b = firefly.propositions
    return Lattice("L12", b.names(), "0", "1", tuple(firefly.hasse))
