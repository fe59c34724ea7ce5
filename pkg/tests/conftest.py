import pytest

from g2weyl import (
    build_hermitian_algebra,
    cyclic_table,
    enumerate_chains,
    generate_root_system,
    hermitian_table,
    rescale_to_integer_basis,
    CartanMatrix,
)
from g2weyl.goldens import reference_cyclic_table, reference_hermitian_table


@pytest.fixture(scope="session")
def g2():
    return generate_root_system(CartanMatrix.from_preset("g2"))


@pytest.fixture(scope="session")
def g2_chains(g2):
    return enumerate_chains(g2)


@pytest.fixture(scope="session")
def ef_algebra(g2):
    return build_hermitian_algebra(g2)


@pytest.fixture(scope="session")
def table_one(ef_algebra):
    algebra, _ = rescale_to_integer_basis(ef_algebra)
    return algebra


@pytest.fixture(scope="session")
def rescaling(ef_algebra):
    _, factors = rescale_to_integer_basis(ef_algebra)
    return factors


@pytest.fixture(scope="session")
def table_two(g2):
    return cyclic_table(g2)


@pytest.fixture(scope="session")
def golden_one(g2):
    return reference_hermitian_table(g2)


@pytest.fixture(scope="session")
def golden_two(g2):
    return reference_cyclic_table(g2)
