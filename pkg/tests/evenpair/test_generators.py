import pytest
from pydantic import ValidationError

from evenpair.generators import (
    catalog,
    generate,
    named_instance,
    random_bipartite,
    random_class_a,
    random_gnp,
    random_wt_prism_free,
)
from evenpair.graph import Graph
from evenpair.models import GenFamily, GenSpec
from evenpair.oracles import class_a_witness
from exceptions.exceptions import (
    OracleBoundExceededError,
    PreconditionViolationError,
    UnknownInstanceError,
)


def test_catalog_lists_named_instances():
    names = catalog()
    assert names == sorted(names)
    for name in ("c4", "c6", "odd-prism-c6bar", "even-prism-9", "snake-proper", "snake-improper"):
        assert name in names


@pytest.mark.parametrize(
    "name, n, m",
    [
        ("odd-prism-c6bar", 6, 9),
        ("c7bar", 7, 14),
        ("even-prism-9", 9, 12),
        ("odd-prism-10", 10, 13),
        ("snake-improper", 12, 14),
        ("snake-proper", 14, 16),
        ("k3-k1", 4, 3),
    ],
)
def test_named_instance_sizes(name: str, n: int, m: int):
    g = named_instance(name)
    assert (g.n, g.m) == (n, m)


def test_c6bar_is_cubic():
    g = named_instance("odd-prism-c6bar")
    assert all(g.degree(v) == 3 for v in g.vertices)


def test_snake_labels():
    g = named_instance("snake-proper")
    assert g.label(0) == "a"
    assert g.label(13) == "b"


def test_unknown_instance():
    with pytest.raises(UnknownInstanceError) as info:
        named_instance("petersen")
    assert "petersen" in str(info.value)


def test_random_bipartite():
    assert random_bipartite(2, 1.0, seed=0) == Graph.from_edges(2, [(0, 1)])
    assert random_bipartite(4, 0.0, seed=0).m == 0

    k33 = random_bipartite(6, 1.0, seed=5)
    assert k33.m == 9
    assert all(k33.degree(v) == 3 for v in k33.vertices)
    assert class_a_witness(k33) is None


def test_random_bipartite_has_no_edges_inside_parts():
    g = random_bipartite(12, 0.7, seed=11)
    for u, v in g.edges():
        assert u < 6 <= v


def test_random_bipartite_precondition():
    with pytest.raises(PreconditionViolationError):
        random_bipartite(0, 0.5, seed=0)


def test_generators_are_deterministic():
    assert random_bipartite(20, 0.3, seed=42) == random_bipartite(20, 0.3, seed=42)
    assert random_gnp(10, 0.5, seed=7) == random_gnp(10, 0.5, seed=7)
    assert random_class_a(8, 0.5, seed=3) == random_class_a(8, 0.5, seed=3)


def test_seed_changes_the_graph():
    graphs = {tuple(random_gnp(12, 0.5, seed=s).edges()) for s in range(5)}
    assert len(graphs) > 1


def test_random_class_a():
    assert random_class_a(3, 1.0, seed=0) == Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    g = random_class_a(7, 0.5, seed=1)
    if g is not None:
        assert class_a_witness(g) is None


def test_random_wt_prism_free_accepts_small_graphs():
    # four vertices hold neither a long hole, a long antihole nor a prism
    assert random_wt_prism_free(4, 0.5, seed=9) is not None


def test_rejection_respects_size_bound():
    with pytest.raises(OracleBoundExceededError):
        random_class_a(21, 0.5, seed=0)


def test_rejection_follows_witness_bound(monkeypatch):
    monkeypatch.setenv("EVENPAIR_WITNESS_MAX_N", "6")
    with pytest.raises(OracleBoundExceededError):
        random_wt_prism_free(7, 0.5, seed=0)
    assert random_class_a(6, 0.0, seed=0) == Graph.from_edges(6, [])


def test_generate():
    assert generate(GenSpec(family=GenFamily.NAMED_INSTANCE, name="c6")) == named_instance("c6")
    spec = GenSpec(family=GenFamily.BIPARTITE, n=8, p=0.5, seed=4)
    assert generate(spec) == random_bipartite(8, 0.5, seed=4)
    with pytest.raises(PreconditionViolationError):
        generate(GenSpec(family=GenFamily.NAMED_INSTANCE))


def test_gen_spec_validation():
    with pytest.raises(ValidationError):
        GenSpec(family=GenFamily.RANDOM_GNP, n=5, p=1.5)
    with pytest.raises(ValidationError):
        GenSpec(family=GenFamily.RANDOM_GNP, n=5, seed=-1)
    with pytest.raises(ValidationError):
        GenSpec(family=GenFamily.REJECTION_CLASS_A, n=5, max_tries=0)
