import os
import time
from itertools import combinations
from typing import Optional

import numpy as np
import pytest

from evenpair.coloring import color, replay_trace, verify_coloring
from evenpair.corpus import check_instance, run_corpus
from evenpair.generators import random_bipartite, random_wt_prism_free
from evenpair.graph import Graph, complete_set, contract, induced_subgraph, is_clique
from evenpair.models import EvenPairCase, GenFamily, GenSpec, Path
from evenpair.oracles import (
    check_parity_lemma,
    chromatic_number_exact,
    class_a_witness,
    enumerate_chordless_paths,
    is_even_pair,
    is_special_even_pair,
    is_two_pair,
    max_clique,
)
from evenpair.special_pair import find_special_even_pair

CORPUS_SIZE = int(os.getenv("EVENPAIR_CORPUS_SIZE", "500"))
WT_CORPUS_SIZE = int(os.getenv("EVENPAIR_WT_CORPUS_SIZE", "200"))
CONTRACTION_SAMPLES = 200
PARITY_SAMPLES = 1000
RUN_PERF = os.getenv("EVENPAIR_RUN_PERF") == "1"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _non_cliques(corpus: list[tuple[str, Graph]]) -> list[tuple[str, Graph]]:
    return [(name, g) for name, g in corpus if not is_clique(g, g.vertices)]


def _sample_configuration(g: Graph, rng: np.random.Generator) -> Optional[tuple[Path, set[int]]]:
    """A chordless path P and a co-connected T disjoint from it, ends of P complete to T."""
    vertices = g.vertices
    t = {vertices[int(rng.integers(len(vertices)))]}
    size = int(rng.integers(1, 4))
    while len(t) < size:
        # a vertex missing some member of T keeps the complement of G[T] connected
        candidates = [w for w in vertices if w not in t and any(not g.has_edge(w, u) for u in t)]
        if not candidates:
            break
        t.add(candidates[int(rng.integers(len(candidates)))])

    c = sorted(complete_set(g, t))
    if len(c) < 2:
        return None
    i, j = sorted(int(k) for k in rng.choice(len(c), size=2, replace=False))
    rest = induced_subgraph(g, [v for v in vertices if v not in t])
    paths = enumerate_chordless_paths(rest, c[i], c[j])
    if not paths:
        return None
    return paths[int(rng.integers(len(paths)))], t


def test_corpus_is_in_class(class_a_corpus):
    assert len(_non_cliques(class_a_corpus)) >= CORPUS_SIZE
    for name, g in class_a_corpus:
        assert class_a_witness(g) is None, name


def test_special_pairs_are_special(class_a_corpus):
    for name, g in _non_cliques(class_a_corpus):
        a, b = find_special_even_pair(g).pair
        assert not g.has_edge(a, b), name
        assert is_special_even_pair(g, a, b), name


def test_colorings_are_optimal(class_a_corpus):
    for name, g in class_a_corpus:
        coloring, trace = color(g)
        assert verify_coloring(g, coloring), name
        assert coloring.num_colors == len(max_clique(g)), name
        assert coloring.num_colors == chromatic_number_exact(g), name
        assert len(trace.steps) <= g.n - 1, name


def test_contractions_stay_in_class(class_a_corpus):
    for name, g in class_a_corpus:
        if g.n > 12:
            continue
        _coloring, trace = color(g, verify_trace=True)
        for h in replay_trace(g, trace):
            assert class_a_witness(h) is None, name


def test_contracting_an_even_pair_keeps_chromatic_number(class_a_corpus):
    eligible = [(name, g) for name, g in _non_cliques(class_a_corpus) if g.n <= 12]
    rng = _rng(7)
    sampled = 0
    for name, g in eligible[:CONTRACTION_SAMPLES]:
        pairs = [(x, y) for x, y in combinations(g.vertices, 2) if not g.has_edge(x, y)]
        even = next(
            pairs[int(k)] for k in rng.permutation(len(pairs)) if is_even_pair(g, *pairs[int(k)])
        )
        merged, _fresh = contract(g, *even)
        assert chromatic_number_exact(merged) == chromatic_number_exact(g), (name, even)
        sampled += 1
    assert sampled == min(CONTRACTION_SAMPLES, len(eligible))


def test_parity_lemma_on_sampled_configurations(class_a_corpus):
    graphs = _non_cliques(class_a_corpus)
    rng = _rng(2024)
    sampled = attempts = 0
    while sampled < PARITY_SAMPLES and attempts < 50 * PARITY_SAMPLES:
        name, g = graphs[attempts % len(graphs)]
        attempts += 1
        configuration = _sample_configuration(g, rng)
        if configuration is None:
            continue
        path, t = configuration
        assert check_parity_lemma(g, path, t), (name, path.vertices, sorted(t))
        if path.length >= 3 and path.length % 2 == 1:
            complete = complete_set(g, t)
            assert any(v in complete for v in path.interior), (name, path.vertices)
        sampled += 1
    assert sampled == PARITY_SAMPLES


def test_weakly_triangulated_pairs_are_two_pairs():
    found = seed = 0
    while found < WT_CORPUS_SIZE and seed < 20 * WT_CORPUS_SIZE:
        n = 6 + seed % 9
        p = (0.3, 0.5, 0.7)[(seed // 9) % 3]
        g = random_wt_prism_free(n, p, seed, max_tries=100)
        seed += 1
        if g is None or is_clique(g, g.vertices):
            continue
        found += 1
        result = find_special_even_pair(g)
        if result.case == EvenPairCase.DISJOINT_CLIQUES:
            continue
        assert is_two_pair(g, *result.pair), (n, p, seed - 1)
    assert found == WT_CORPUS_SIZE


def test_check_instance_reports_skips():
    report = check_instance(GenSpec(family=GenFamily.NAMED_INSTANCE, name="c5"), two_pair=False)
    assert report["status"] == "skipped"
    report = check_instance(GenSpec(family=GenFamily.NAMED_INSTANCE, name="c6"), two_pair=False)
    assert report == {"seed": 0, "status": "checked", "n": 6, "problems": []}


def test_check_instance_on_bipartite_beyond_witness_bound():
    spec = GenSpec(family=GenFamily.BIPARTITE, n=40, p=0.1, seed=3)
    report = check_instance(spec, two_pair=False)
    assert report["status"] == "checked"
    assert report["problems"] == []


def test_run_corpus_on_weakly_triangulated_family():
    spec = GenSpec(family=GenFamily.WEAKLY_TRIANGULATED_PRISM_FREE, n=7, p=0.5, seed=0, max_tries=50)
    outcome = run_corpus(spec, count=6)
    assert outcome.instances == 6
    assert outcome.failures == []


def test_run_corpus_with_process_pool():
    spec = GenSpec(family=GenFamily.BIPARTITE, n=10, p=0.4, seed=100)
    assert run_corpus(spec, count=4, jobs=2) == run_corpus(spec, count=4, jobs=1)


@pytest.mark.skipif(not RUN_PERF, reason="set EVENPAIR_RUN_PERF=1 to run")
def test_special_pair_on_large_bipartite_graph():
    g = random_bipartite(200, 0.1, seed=1)
    start = time.perf_counter()
    a, b = find_special_even_pair(g).pair
    assert time.perf_counter() - start < 10
    assert not g.has_edge(a, b)


@pytest.mark.skipif(not RUN_PERF, reason="set EVENPAIR_RUN_PERF=1 to run")
def test_coloring_on_mid_size_bipartite_graph():
    g = random_bipartite(100, 0.1, seed=2)
    start = time.perf_counter()
    coloring, _trace = color(g)
    assert time.perf_counter() - start < 120
    assert verify_coloring(g, coloring)
    assert coloring.num_colors == len(max_clique(g))
