import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dscodes.code import CheckSet, five_qubit, steane_alternative, steane_css
from dscodes.redundancy import parity_augment


@pytest.fixture(scope="session")
def five():
    return five_qubit()


@pytest.fixture(scope="session")
def steane():
    return steane_css()


@pytest.fixture(scope="session")
def steane_alt():
    return steane_alternative()


@pytest.fixture(scope="session")
def bare_five(five):
    return CheckSet.from_code(five)


@pytest.fixture(scope="session")
def augmented_five(five):
    return parity_augment(five)
