import pytest

from rankspectra import GabidulinCode, prime_field, uniform_qmatroid
from rankspectra.lattice import build_cycle_lattice, virtual_betti_table

# F_2 -> F_16 by x^4 + x + 1; generator over F_16, little-endian bit encodings
EXAMPLE_MODULUS = [1, 1, 0, 0, 1]
EXAMPLE_GENERATOR = [[7, 4, 11, 15], [7, 9, 2, 3], [5, 1, 5, 9]]
MRD_ANCHORS = [1, 2, 4, 8]


@pytest.fixture(scope="session")
def tower16():
    return prime_field(2).extend(EXAMPLE_MODULUS)


@pytest.fixture(scope="session")
def example_code(tower16):
    return GabidulinCode(tower16, 0, 1, EXAMPLE_GENERATOR)


@pytest.fixture(scope="session")
def example_matroid(example_code):
    return example_code.qmatroid()


@pytest.fixture(scope="session")
def example_lattice(example_matroid):
    return build_cycle_lattice(example_matroid)


@pytest.fixture(scope="session")
def example_table(example_lattice):
    return virtual_betti_table(example_lattice)


@pytest.fixture(scope="session")
def mrd_code(tower16):
    return GabidulinCode.mrd(tower16, 0, 1, MRD_ANCHORS, 2)


@pytest.fixture(scope="session")
def uniform24():
    return uniform_qmatroid(2, 4, 2)
