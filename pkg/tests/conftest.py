import pytest
from hypothesis import settings

from mcgraph.bricks import is_cubic_brick, is_essentially_4ec_cubic
from mcgraph.catalog import catalog
from mcgraph.corpus import generate_cubic
from mcgraph.matching import is_matching_covered

settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def cubic():
    """Connected simple cubic graphs by order, n <= 12."""
    return {n: list(generate_cubic(n)) for n in (4, 6, 8, 10, 12)}


@pytest.fixture(scope="session")
def cubic_mc(cubic):
    return {n: [g for g in gs if is_matching_covered(g)] for n, gs in cubic.items()}


@pytest.fixture(scope="session")
def efec_bricks(cubic):
    return [g for n in sorted(cubic) for g in cubic[n] if is_essentially_4ec_cubic(g) and is_cubic_brick(g)]


@pytest.fixture(scope="session")
def efec_bricks_plus(efec_bricks):
    """The generated efec cubic bricks together with the larger catalog ones."""
    return efec_bricks + [catalog("fig4").graph]


@pytest.fixture
def k4():
    return catalog("k4").graph


@pytest.fixture
def prism():
    return catalog("c6bar").graph


@pytest.fixture
def k33():
    return catalog("k33").graph


@pytest.fixture
def petersen():
    return catalog("petersen").graph
