import itertools

import numpy as np
import pytest

from srgsep.graph import DenseGraph


def brute_force_clique(g: DenseGraph) -> int:
    """Largest clique by enumerating subsets from the top size down."""
    a = g.adjacency
    n = g.nu
    for size in range(n, 0, -1):
        for s in itertools.combinations(range(n), size):
            if all(a[u, v] for u, v in itertools.combinations(s, 2)):
                return size
    return 0


def random_graph(n: int, p: float, rng) -> DenseGraph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return DenseGraph((upper | upper.T).astype(np.uint8))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one line per acceptance criterion, repeated at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
