import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from locdom.graphs import decode_graph6, generate, new_graph


@pytest.fixture
def p4():
    return new_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4():
    return new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def c5():
    return generate("cycle", 5)


@pytest.fixture
def k1():
    return new_graph(1, [])


@pytest.fixture
def k2():
    return new_graph(2, [(0, 1)])


def random_graphs(count, n_lo, n_hi, p=0.4, seed0=0):
    """Deterministic stream of gnp graphs cycling over orders n_lo..n_hi."""
    out = []
    seed = seed0
    while len(out) < count:
        for n in range(n_lo, n_hi + 1):
            seed += 1
            out.append(generate("gnp", n, p, seed))
            if len(out) == count:
                break
    return out
