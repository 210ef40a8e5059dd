import pytest

from shard_forge import load


@pytest.fixture(scope="session")
def b2():
    return load("b2")


@pytest.fixture(scope="session")
def a2():
    return load("a2")


@pytest.fixture(scope="session")
def a3():
    return load("a3")


@pytest.fixture(scope="session")
def d4():
    return load("d4")


@pytest.fixture(scope="session")
def rank6():
    return load("rank6")
