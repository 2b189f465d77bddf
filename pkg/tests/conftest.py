import pytest

from hopfforge import catalog
from hopfforge.analyze import induced_structures, thinness_and_basis, cocycle_analysis


@pytest.fixture(scope="session")
def b0_entry():
    return catalog.b0()


@pytest.fixture(scope="session")
def xmas_entry():
    return catalog.xmas()


@pytest.fixture(scope="session")
def c4min_entry():
    return catalog.c4min()


@pytest.fixture(scope="session")
def qline6_entry():
    return catalog.qline6()


@pytest.fixture(scope="session")
def smash36_entry():
    return catalog.smash36()


@pytest.fixture(scope="session")
def kc12n6_entry():
    return catalog.kc12n6()


@pytest.fixture(scope="session")
def xmas_pi_analysis(xmas_entry):
    """Induced structures + thin basis + cocycle analysis for the
    non-normalized projection of the dim-72 example (computed once)."""
    setup = xmas_entry.extra["setup_pi"]
    ind = induced_structures(setup)
    thin, basis, datum = thinness_and_basis(ind)
    assert thin
    ana = cocycle_analysis(ind, basis)
    return ind, basis, datum, ana


@pytest.fixture(scope="session")
def c4min_analysis(c4min_entry):
    setup = c4min_entry.setup
    ind = induced_structures(setup)
    thin, basis, datum = thinness_and_basis(ind)
    assert thin
    ana = cocycle_analysis(ind, basis)
    return ind, basis, datum, ana
