import os

import pytest

from evenpair.generators import named_instance, random_bipartite, random_class_a
from evenpair.graph import Graph, is_clique

CORPUS_SIZE = int(os.getenv("EVENPAIR_CORPUS_SIZE", "500"))
CLASS_A_NAMES = ("c4", "c6", "p3", "p4", "2k2", "k3-k1", "k4", "snake-improper")


@pytest.fixture
def c4() -> Graph:
    return named_instance("c4")


@pytest.fixture
def c5() -> Graph:
    return named_instance("c5")


@pytest.fixture
def c6() -> Graph:
    return named_instance("c6")


@pytest.fixture
def c6bar() -> Graph:
    return named_instance("odd-prism-c6bar")


@pytest.fixture
def c7bar() -> Graph:
    return named_instance("c7bar")


@pytest.fixture
def p3() -> Graph:
    return named_instance("p3")


@pytest.fixture
def p4() -> Graph:
    return named_instance("p4")


@pytest.fixture
def k4() -> Graph:
    return named_instance("k4")


@pytest.fixture
def two_k2() -> Graph:
    return named_instance("2k2")


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def isolated_pair() -> Graph:
    return Graph.from_edges(2, [])


@pytest.fixture
def edge() -> Graph:
    return Graph.from_edges(2, [(0, 1)])


def _corpus() -> list[tuple[str, Graph]]:
    """Named instances, then seeded class-A graphs until CORPUS_SIZE non-cliques are in."""
    graphs = [(name, named_instance(name)) for name in CLASS_A_NAMES]
    found = sum(1 for _name, g in graphs if not is_clique(g, g.vertices))
    seed = 0
    while found < CORPUS_SIZE and seed < 20 * CORPUS_SIZE:
        n = 5 + seed % 10
        p = (0.15, 0.25, 0.35, 0.5)[(seed // 10) % 4]
        g = random_class_a(n, p, seed, max_tries=50)
        if g is not None and not is_clique(g, g.vertices):
            graphs.append((f"class-a-{n}-{p}-{seed}", g))
            found += 1
        seed += 1
    for seed in range(max(1, CORPUS_SIZE // 10)):
        graphs.append((f"bipartite-10-{seed}", random_bipartite(10, 0.4, seed)))
    return graphs


@pytest.fixture(scope="session")
def class_a_corpus() -> list[tuple[str, Graph]]:
    """Named and seeded graphs with no odd hole, no long antihole and no prism."""
    return _corpus()
