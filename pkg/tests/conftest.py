import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclemill import build_tournament, rotational_tournament


def transitive(n):
    return build_tournament(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture
def paley7():
    return rotational_tournament(7, {1, 2, 4})


@pytest.fixture
def triangle():
    return build_tournament(3, [(0, 1), (1, 2), (2, 0)])
