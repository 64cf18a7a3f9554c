import pytest

import lexfan as lf
from oracles import chain_complex, seg_cell


@pytest.fixture(scope="session")
def chain():
    return chain_complex()


@pytest.fixture(scope="session")
def chain_fan(chain):
    return lf.cone_over_complex(chain)


@pytest.fixture
def segment():
    return seg_cell([0, -1], [0, 1])
