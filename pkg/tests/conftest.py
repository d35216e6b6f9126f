import pytest

from cechmod import cyclic_group, symmetric_group, trivial_group
from cechmod.catalog import named_complex, named_crossed_module


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def one():
    return trivial_group()


def cm(name):
    return named_crossed_module(name)


def cx(name):
    return named_complex(name)
