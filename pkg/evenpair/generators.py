"""Seeded instance generators.

All randomness comes from numpy's PCG64 bit generator seeded with the
caller's seed. Candidate edges are visited in ascending (i, j) order and
each consumes exactly one uniform draw, so a seed fixes the graph on every
platform.
"""

import logging
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from evenpair.config import get_settings
from evenpair.graph import Graph, complement
from evenpair.models import GenFamily, GenSpec
from evenpair.oracles import class_a_witness, find_prism, is_weakly_triangulated
from exceptions.exceptions import (
    OracleBoundExceededError,
    PreconditionViolationError,
    UnknownInstanceError,
)

logger = logging.getLogger(__name__)


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _clique(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def _prism(paths: list[list[int]], n: int) -> Graph:
    # triangles on the first and last vertex of each path
    edges = list(combinations([p[0] for p in paths], 2))
    edges += list(combinations([p[-1] for p in paths], 2))
    for p in paths:
        edges += list(zip(p, p[1:]))
    return Graph.from_edges(n, edges)


def _odd_prism_10() -> Graph:
    return _prism([[0, 3], [1, 6, 7, 4], [2, 8, 9, 5]], 10)


def _even_prism_9() -> Graph:
    return _prism([[0, 6, 3], [1, 7, 4], [2, 8, 5]], 9)


def _snake(s1: list[int], s2: list[int], s3: list[int], s4: list[int], labels: dict[int, str]) -> Graph:
    n = len(s1) + len(s2) + len(s3) + len(s4)
    edges = [(s1[-1], s3[0]), (s1[-1], s4[0]), (s3[0], s4[0])]
    edges += [(s2[-1], s3[-1]), (s2[-1], s4[-1]), (s3[-1], s4[-1])]
    for part in (s1, s2, s3, s4):
        edges += list(zip(part, part[1:]))
    return Graph.from_edges(n, edges, labels)


def _snake_improper() -> Graph:
    # a and b are themselves the triangle apexes
    labels = {0: "a", 1: "c", 5: "c'", 6: "d", 10: "d'", 11: "b"}
    return _snake([0], [11], [1, 2, 3, 4, 5], [6, 7, 8, 9, 10], labels)


def _snake_proper() -> Graph:
    labels = {0: "a", 1: "a'", 2: "c", 7: "c'", 8: "d", 10: "d'", 11: "b'", 13: "b"}
    return _snake([0, 1], [13, 12, 11], [2, 3, 4, 5, 6, 7], [8, 9, 10], labels)


_NAMED: dict[str, Callable[[], Graph]] = {
    "c4": lambda: _cycle(4),
    "c5": lambda: _cycle(5),
    "c6": lambda: _cycle(6),
    "c7": lambda: _cycle(7),
    "c7bar": lambda: complement(_cycle(7)),
    "p3": lambda: _path(3),
    "p4": lambda: _path(4),
    "k4": lambda: _clique(4),
    "k5": lambda: _clique(5),
    "2k2": lambda: Graph.from_edges(4, [(0, 1), (2, 3)]),
    "k3-k1": lambda: Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)]),
    "odd-prism-c6bar": lambda: complement(_cycle(6)),
    "odd-prism-10": _odd_prism_10,
    "even-prism-9": _even_prism_9,
    "snake-improper": _snake_improper,
    "snake-proper": _snake_proper,
}

# endpoints (a, b) of the snake instances
SNAKE_ENDPOINTS = {"snake-improper": (0, 11), "snake-proper": (0, 13)}


def catalog() -> list[str]:
    return sorted(_NAMED)


def named_instance(name: str) -> Graph:
    try:
        builder = _NAMED[name]
    except KeyError:
        raise UnknownInstanceError(name, _NAMED)
    return builder()


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _sample(rng: np.random.Generator, n: int, pairs: list[tuple[int, int]], p: float) -> Graph:
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, [pair for pair, draw in zip(pairs, draws) if draw < p])


def random_bipartite(n: int, p: float, seed: int) -> Graph:
    """Balanced bipartite graph: parts 0..n//2-1 and n//2..n-1."""
    if n < 1:
        raise PreconditionViolationError("random_bipartite", f"n must be at least 1, got {n}")
    half = n // 2
    pairs = [(i, j) for i in range(half) for j in range(half, n)]
    return _sample(_rng(seed), n, pairs, p)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    return _sample(_rng(seed), n, list(combinations(range(n), 2)), p)


def _rejection(
    family: str,
    n: int,
    p: float,
    seed: int,
    max_tries: int,
    accept: Callable[[Graph], bool],
) -> Optional[Graph]:
    bound = get_settings().witness_oracle_max_n
    if n > bound:
        raise OracleBoundExceededError(family, n, bound)
    rng = _rng(seed)
    pairs = list(combinations(range(n), 2))
    for attempt in range(1, max_tries + 1):
        g = _sample(rng, n, pairs, p)
        if accept(g):
            logger.info(f"{family} accepted a graph with {g.m} edges on try {attempt}")
            return g
    logger.info(f"{family} found nothing in {max_tries} tries (n={n}, p={p}, seed={seed})")
    return None


def random_class_a(n: int, p: float, seed: int, max_tries: int = 100) -> Optional[Graph]:
    return _rejection(
        "random_class_a", n, p, seed, max_tries, lambda g: class_a_witness(g) is None
    )


def random_wt_prism_free(n: int, p: float, seed: int, max_tries: int = 100) -> Optional[Graph]:
    return _rejection(
        "random_wt_prism_free",
        n,
        p,
        seed,
        max_tries,
        lambda g: is_weakly_triangulated(g) and find_prism(g) is None,
    )


def generate(spec: GenSpec) -> Optional[Graph]:
    if spec.family == GenFamily.NAMED_INSTANCE:
        if spec.name is None:
            raise PreconditionViolationError("generate", "NamedInstance requires a name")
        return named_instance(spec.name)
    if spec.family == GenFamily.BIPARTITE:
        return random_bipartite(spec.n, spec.p, spec.seed)
    if spec.family == GenFamily.RANDOM_GNP:
        return random_gnp(spec.n, spec.p, spec.seed)
    if spec.family == GenFamily.REJECTION_CLASS_A:
        return random_class_a(spec.n, spec.p, spec.seed, spec.max_tries)
    return random_wt_prism_free(spec.n, spec.p, spec.seed, spec.max_tries)
