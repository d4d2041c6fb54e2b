"""Exhaustive ground-truth checks.

Everything here is exponential in the worst case and guarded by the size
bounds of :mod:`evenpair.config`. None of it is on the coloring pipeline's
hot path; the pipeline only calls these when trace verification is on.
"""

import logging
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from evenpair.config import get_settings
from evenpair.graph import (
    Graph,
    VertexId,
    complement,
    complete_set,
    induced_subgraph,
    is_chordless_path,
    is_clique,
    is_co_connected,
    to_networkx,
)
from evenpair.models import OutcomeReport, Path, Snake, Witness, WitnessKind
from exceptions.exceptions import (
    AdjacentVerticesError,
    OracleBoundExceededError,
    PathCapExceededError,
    PreconditionViolationError,
)

logger = logging.getLogger(__name__)


def _guard(oracle: str, g: Graph, bound: int) -> None:
    if g.n > bound:
        raise OracleBoundExceededError(oracle, g.n, bound)


def _chordless_paths(
    g: Graph, x: VertexId, y: VertexId, allowed: Optional[frozenset[VertexId]] = None
) -> Iterator[tuple[VertexId, ...]]:
    """Yield every chordless x-y path whose interior lies in ``allowed``.

    A vertex may extend the path only if it misses every path vertex except
    the last one. A vertex seeing y closes the path at once, so no path
    vertex other than the last ever sees y.
    """
    if x == y:
        yield (x,)
        return
    if g.has_edge(x, y):
        yield (x, y)
        return

    path = [x]
    on_path = {x}

    def walk() -> Iterator[tuple[VertexId, ...]]:
        for w in g.sorted_neighbors(path[-1]):
            if w in on_path or w == y:
                continue
            if allowed is not None and w not in allowed:
                continue
            if len(g.adj(w) & on_path) != 1:
                continue
            if g.has_edge(w, y):
                yield tuple(path) + (w, y)
                continue
            path.append(w)
            on_path.add(w)
            yield from walk()
            path.pop()
            on_path.discard(w)

    yield from walk()


def _counted(paths: Iterator[tuple[VertexId, ...]], cap: int) -> Iterator[tuple[VertexId, ...]]:
    for count, path in enumerate(paths, start=1):
        if count > cap:
            raise PathCapExceededError(cap)
        yield path


def _canonical_cycle(cycle: Sequence[VertexId]) -> tuple[VertexId, ...]:
    start = cycle.index(min(cycle))
    rotated = list(cycle[start:]) + list(cycle[:start])
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def _holes(g: Graph, min_length: int) -> Iterator[tuple[VertexId, ...]]:
    for cycle in nx.chordless_cycles(to_networkx(g)):
        if len(cycle) >= min_length:
            yield _canonical_cycle(cycle)


def _triangles(g: Graph) -> Iterator[tuple[VertexId, VertexId, VertexId]]:
    for u in g.vertices:
        for v in g.sorted_neighbors(u):
            if v <= u:
                continue
            for w in g.sorted_neighbors(u):
                if w > v and g.has_edge(v, w):
                    yield (u, v, w)


def _closed_neighborhood(g: Graph, vertices: Iterable[VertexId]) -> set[VertexId]:
    block: set[VertexId] = set()
    for v in vertices:
        block.add(v)
        block |= g.adj(v)
    return block


def _induces_exactly(g: Graph, vertices: Iterable[VertexId], edges: Iterable[tuple[int, int]]) -> bool:
    sub = induced_subgraph(g, vertices)
    expected = {tuple(sorted(e)) for e in edges}
    return set(sub.edges()) == expected


def _path_edges(vertices: Sequence[VertexId]) -> list[tuple[VertexId, VertexId]]:
    return list(zip(vertices, vertices[1:]))


def find_odd_hole(g: Graph) -> Optional[Witness]:
    _guard("find_odd_hole", g, get_settings().witness_oracle_max_n)
    for hole in _holes(g, 5):
        if len(hole) % 2 == 1:
            logger.debug(f"Odd hole of length {len(hole)} found")
            return Witness(kind=WitnessKind.ODD_HOLE, vertices=hole)
    return None


def find_long_antihole(g: Graph) -> Optional[Witness]:
    """Antihole of length at least 5, listed in the cyclic order of the complement."""
    _guard("find_long_antihole", g, get_settings().witness_oracle_max_n)
    for hole in _holes(complement(g), 5):
        logger.debug(f"Antihole of length {len(hole)} found")
        return Witness(kind=WitnessKind.ANTIHOLE, vertices=hole)
    return None


def _prism_paths(
    g: Graph, first: Sequence[VertexId], second: Sequence[VertexId]
) -> Optional[list[tuple[VertexId, ...]]]:
    for i in range(3):
        for j in range(3):
            if i != j and g.has_edge(first[i], second[j]):
                return None

    corners = set(first) | set(second)
    allowed = []
    for i in range(3):
        others = corners - {first[i], second[i]}
        allowed.append(frozenset(g.vertex_set - _closed_neighborhood(g, others)))

    def connect(i: int, block: frozenset[VertexId]) -> Optional[list[tuple[VertexId, ...]]]:
        if i == 3:
            return []
        for path in _chordless_paths(g, first[i], second[i], allowed[i] - block):
            interior = path[1:-1]
            rest = connect(i + 1, block | _closed_neighborhood(g, interior))
            if rest is not None:
                return [path] + rest
        return None

    return connect(0, frozenset())


def find_prism(g: Graph) -> Optional[Witness]:
    """First prism under ascending triangle order, validated by edge-set equality."""
    _guard("find_prism", g, get_settings().witness_oracle_max_n)
    triangles = list(_triangles(g))
    for i, first in enumerate(triangles):
        for second_sorted in triangles[i + 1 :]:
            if set(first) & set(second_sorted):
                continue
            for second in permutations(second_sorted):
                paths = _prism_paths(g, first, second)
                if paths is None:
                    continue
                vertices = tuple(first) + tuple(second)
                vertices += tuple(v for path in paths for v in path[1:-1])
                witness = Witness(
                    kind=WitnessKind.PRISM,
                    vertices=vertices,
                    paths=tuple(Path(vertices=path) for path in paths),
                )
                if validate_witness(g, witness):
                    logger.debug(f"Prism found on triangles {first} and {second}")
                    return witness
    return None


def _antihole_as_prism(antihole: Witness) -> Witness:
    # The antihole of length 6 is itself a prism: alternate cycle positions
    # form the triangles and antipodal positions are joined.
    c = antihole.vertices
    first = (c[0], c[2], c[4])
    second = (c[3], c[5], c[1])
    return Witness(
        kind=WitnessKind.PRISM,
        vertices=first + second,
        paths=tuple(Path(vertices=(u, v)) for u, v in zip(first, second)),
    )


def class_a_witness(g: Graph) -> Optional[Witness]:
    """None iff g has no odd hole, no antihole of length >= 5 and no prism."""
    _guard("class_a_witness", g, get_settings().witness_oracle_max_n)
    witness = find_odd_hole(g)
    if witness is not None:
        return witness
    witness = find_long_antihole(g)
    if witness is not None:
        if len(witness.vertices) == 6:
            return _antihole_as_prism(witness)
        return witness
    return find_prism(g)


def validate_witness(g: Graph, witness: Witness) -> bool:
    vertices = witness.vertices
    if len(set(vertices)) != len(vertices) or any(v not in g for v in vertices):
        return False

    if witness.kind in (WitnessKind.ODD_HOLE, WitnessKind.ANTIHOLE):
        host = g if witness.kind == WitnessKind.ODD_HOLE else complement(g)
        if len(vertices) < 5:
            return False
        if witness.kind == WitnessKind.ODD_HOLE and len(vertices) % 2 == 0:
            return False
        cycle = _path_edges(vertices) + [(vertices[-1], vertices[0])]
        return _induces_exactly(host, vertices, cycle)

    if len(witness.paths) != 3:
        return False
    first = tuple(path.start for path in witness.paths)
    second = tuple(path.end for path in witness.paths)
    if not (is_clique(g, first) and is_clique(g, second)):
        return False
    used = [v for path in witness.paths for v in path.vertices]
    if len(set(used)) != len(used) or set(used) != set(vertices):
        return False
    expected = list(combinations(first, 2)) + list(combinations(second, 2))
    for path in witness.paths:
        if path.length < 1:
            return False
        expected += _path_edges(path.vertices)
    return _induces_exactly(g, vertices, expected)


def enumerate_chordless_paths(
    g: Graph, x: VertexId, y: VertexId, cap: Optional[int] = None
) -> list[Path]:
    settings = get_settings()
    _guard("enumerate_chordless_paths", g, settings.path_oracle_max_n)
    g.check_vertices((x, y))
    if x == y:
        raise PreconditionViolationError("enumerate_chordless_paths", "endpoints must differ")
    limit = settings.path_enumeration_cap if cap is None else cap
    return [Path(vertices=path) for path in _counted(_chordless_paths(g, x, y), limit)]


def _pair_paths(g: Graph, x: VertexId, y: VertexId, oracle: str) -> Iterator[tuple[VertexId, ...]]:
    settings = get_settings()
    _guard(oracle, g, settings.path_oracle_max_n)
    g.check_vertices((x, y))
    if x == y:
        raise PreconditionViolationError(oracle, "endpoints must differ")
    if g.has_edge(x, y):
        raise AdjacentVerticesError(x, y, operation=oracle)
    return _counted(_chordless_paths(g, x, y), settings.path_enumeration_cap)


def is_even_pair(g: Graph, x: VertexId, y: VertexId) -> bool:
    return all((len(path) - 1) % 2 == 0 for path in _pair_paths(g, x, y, "is_even_pair"))


def is_two_pair(g: Graph, x: VertexId, y: VertexId) -> bool:
    found = False
    for path in _pair_paths(g, x, y, "is_two_pair"):
        if len(path) != 3:
            return False
        found = True
    return found


def is_even_pair_by_extension(g: Graph, x: VertexId, y: VertexId) -> bool:
    """Even-pair test through a new vertex adjacent to x and y only.

    {x, y} is an even pair iff no odd hole passes through the new vertex.
    """
    settings = get_settings()
    _guard("is_even_pair_by_extension", g, settings.path_oracle_max_n)
    g.check_vertices((x, y))
    if g.has_edge(x, y):
        raise AdjacentVerticesError(x, y, operation="is_even_pair_by_extension")
    extra = max(g.vertices) + 1
    G = to_networkx(g)
    G.add_edges_from([(extra, x), (extra, y)])
    for cycle in nx.chordless_cycles(G):
        if extra in cycle and len(cycle) >= 5 and len(cycle) % 2 == 1:
            return False
    return True


def _snake_tail(
    g: Graph, start: VertexId, corner: VertexId, allowed: frozenset[VertexId]
) -> Iterator[tuple[VertexId, ...]]:
    # S1 or S2: a chordless start..corner path with every vertex but the
    # corner inside ``allowed``.
    if start == corner:
        yield (start,)
        return
    if start not in allowed:
        return
    yield from _chordless_paths(g, start, corner, allowed)


def _snakes(g: Graph, a: VertexId, b: VertexId, proper_only: bool) -> Iterator[Snake]:
    everything = g.vertex_set
    for a1 in g.vertices:
        if a1 == b:
            continue
        for c, d in combinations(g.sorted_neighbors(a1), 2):
            if not g.has_edge(c, d) or {c, d} & {a, b}:
                continue
            first = {a1, c, d}
            for b1 in g.vertices:
                if b1 in first or b1 == a or g.adj(b1) & first:
                    continue
                if proper_only and a1 == a and b1 == b:
                    continue
                for c2, d2 in permutations(g.sorted_neighbors(b1), 2):
                    if not g.has_edge(c2, d2) or {c2, d2} & (first | {a, b}):
                        continue
                    if g.has_edge(a1, c2) or g.has_edge(a1, d2):
                        continue
                    if g.has_edge(c, d2) or g.has_edge(d, c2):
                        continue
                    corners = first | {b1, c2, d2}
                    base = everything - corners - {a, b}
                    s3_allowed = frozenset(base - _closed_neighborhood(g, (a1, d, b1, d2)))
                    for s3 in _chordless_paths(g, c, c2, s3_allowed):
                        s4_block = _closed_neighborhood(g, (a1, c, b1, c2) + s3[1:-1])
                        s4_allowed = frozenset(base - s4_block)
                        for s4 in _chordless_paths(g, d, d2, s4_allowed):
                            hole = s3 + s4
                            s1_allowed = frozenset(
                                everything - _closed_neighborhood(g, hole + (b1,))
                            )
                            for s1 in _snake_tail(g, a, a1, s1_allowed):
                                s2_allowed = frozenset(
                                    everything - _closed_neighborhood(g, hole + s1)
                                )
                                for s2 in _snake_tail(g, b, b1, s2_allowed):
                                    snake = Snake(
                                        a=a,
                                        b=b,
                                        s1=Path(vertices=s1),
                                        s2=Path(vertices=s2),
                                        s3=Path(vertices=s3),
                                        s4=Path(vertices=s4),
                                    )
                                    if validate_snake(g, snake):
                                        yield snake


def validate_snake(g: Graph, snake: Snake) -> bool:
    parts = (snake.s1, snake.s2, snake.s3, snake.s4)
    vertices = snake.vertices
    if len(set(vertices)) != len(vertices) or any(v not in g for v in vertices):
        return False
    if snake.s1.start != snake.a or snake.s2.start != snake.b:
        return False
    if snake.s3.length < 1 or snake.s4.length < 1:
        return False
    a1, b1 = snake.s1.end, snake.s2.end
    c, c2 = snake.s3.start, snake.s3.end
    d, d2 = snake.s4.start, snake.s4.end
    expected = [(a1, c), (a1, d), (c, d), (b1, c2), (b1, d2), (c2, d2)]
    for part in parts:
        expected += _path_edges(part.vertices)
    return _induces_exactly(g, vertices, expected)


def find_proper_snake(g: Graph, a: VertexId, b: VertexId) -> Optional[Snake]:
    settings = get_settings()
    _guard("find_proper_snake", g, settings.snake_oracle_max_n)
    g.check_vertices((a, b))
    if a == b:
        raise PreconditionViolationError("find_proper_snake", "endpoints must differ")
    for snake in _snakes(g, a, b, proper_only=True):
        if snake.is_proper:
            return snake
    return None


def is_special_even_pair(g: Graph, a: VertexId, b: VertexId) -> bool:
    if not is_even_pair(g, a, b):
        return False
    return find_proper_snake(g, a, b) is None


def is_weakly_triangulated(g: Graph) -> bool:
    _guard("is_weakly_triangulated", g, get_settings().witness_oracle_max_n)
    for host in (g, complement(g)):
        for _ in _holes(host, 5):
            return False
    return True


def is_berge(g: Graph) -> bool:
    _guard("is_berge", g, get_settings().witness_oracle_max_n)
    for host in (g, complement(g)):
        for hole in _holes(host, 5):
            if len(hole) % 2 == 1:
                return False
    return True


def max_clique(g: Graph) -> frozenset[VertexId]:
    """Maximum clique by networkx branch and bound (unit weights)."""
    if g.n == 0:
        return frozenset()
    clique, _weight = nx.max_weight_clique(to_networkx(g), weight=None)
    return frozenset(clique)


def chromatic_number_exact(g: Graph) -> int:
    settings = get_settings()
    _guard("chromatic_number_exact", g, settings.chromatic_oracle_max_n)
    if g.n == 0:
        return 0
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    for k in range(max(1, len(max_clique(g))), g.n + 1):
        if _is_colorable(g, order, k):
            return k
    return g.n


def _is_colorable(g: Graph, order: Sequence[VertexId], k: int) -> bool:
    classes = [0] * k

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        nbrs = g.adjacency_mask(v)
        # a fresh color class is only tried once, in its lowest position
        for color in range(min(used + 1, k)):
            if classes[color] & nbrs:
                continue
            classes[color] |= 1 << v
            if place(i + 1, max(used, color + 1)):
                return True
            classes[color] &= ~(1 << v)
        return False

    return place(0, 0)


def _check_path_configuration(g: Graph, p: Sequence[VertexId], t: Sequence[VertexId], check: str):
    g.check_vertices(list(p) + list(t))
    if len(p) == 0 or not is_chordless_path(g, p):
        raise PreconditionViolationError(check, "p must be a chordless path")
    if not t:
        raise PreconditionViolationError(check, "t must be non-empty")
    if set(p) & set(t):
        raise PreconditionViolationError(check, "p and t must be disjoint")
    if not is_co_connected(g, t):
        raise PreconditionViolationError(check, "t must be co-connected")
    complete = complete_set(g, t)
    if p[0] not in complete or p[-1] not in complete:
        raise PreconditionViolationError(check, "endpoints of p must be T-complete")
    return complete


def _as_vertices(p: Path | Sequence[VertexId]) -> tuple[VertexId, ...]:
    return p.vertices if isinstance(p, Path) else tuple(p)


def _count_t_edges(edges: Iterable[tuple[VertexId, VertexId]], complete: frozenset[VertexId]) -> int:
    return sum(1 for u, v in edges if u in complete and v in complete)


def check_parity_lemma(g: Graph, p: Path | Sequence[VertexId], t: Iterable[VertexId]) -> bool:
    """Number of T-edges on p has the parity of p's length."""
    vertices = _as_vertices(p)
    members = tuple(sorted(set(t)))
    complete = _check_path_configuration(g, vertices, members, "check_parity_lemma")
    t_edges = _count_t_edges(_path_edges(vertices), complete)
    return t_edges % 2 == (len(vertices) - 1) % 2


def check_hole_parity_lemma(g: Graph, hole: Sequence[VertexId], t: Iterable[VertexId]) -> bool:
    """A hole with two non-adjacent T-complete vertices has an even number of T-edges."""
    cycle = tuple(hole)
    members = tuple(sorted(set(t)))
    g.check_vertices(cycle + members)
    ring = _path_edges(cycle) + [(cycle[-1], cycle[0])]
    if len(cycle) < 4 or len(set(cycle)) != len(cycle) or not _induces_exactly(g, cycle, ring):
        raise PreconditionViolationError("check_hole_parity_lemma", "hole must be a chordless cycle of length >= 4")
    if not members or set(members) & set(cycle):
        raise PreconditionViolationError("check_hole_parity_lemma", "t must be non-empty and disjoint from the hole")
    if not is_co_connected(g, members):
        raise PreconditionViolationError("check_hole_parity_lemma", "t must be co-connected")
    complete = complete_set(g, members)
    on_hole = [v for v in cycle if v in complete]
    if not any(not g.has_edge(u, v) for u, v in combinations(on_hole, 2)):
        raise PreconditionViolationError(
            "check_hole_parity_lemma", "two non-adjacent hole vertices must be T-complete"
        )
    return _count_t_edges(ring, complete) % 2 == 0


def check_roussel_rubio(
    g: Graph, p: Path | Sequence[VertexId], t: Iterable[VertexId]
) -> OutcomeReport:
    """Report which of the four path/co-connected-set outcomes hold.

    0: even length, even T-edge count. 1: odd length, odd T-edge count.
    2: odd length >= 3 and a leap for p inside t.
    3: length 3 and the two internal vertices are the ends of an odd
    chordless path of the complement with interior in t.
    """
    vertices = _as_vertices(p)
    members = tuple(sorted(set(t)))
    complete = _check_path_configuration(g, vertices, members, "check_roussel_rubio")
    length = len(vertices) - 1
    t_edges = _count_t_edges(_path_edges(vertices), complete)

    outcomes = []
    if length % 2 == 0 and t_edges % 2 == 0:
        outcomes.append(0)
    if length % 2 == 1 and t_edges % 2 == 1:
        outcomes.append(1)

    leap = None
    if length % 2 == 1 and length >= 3:
        x, x1, y1, y = vertices[0], vertices[1], vertices[-2], vertices[-1]
        on_path = frozenset(vertices)
        for u, v in permutations(members, 2):
            if g.has_edge(u, v):
                continue
            if g.adj(u) & on_path == {x, x1, y} and g.adj(v) & on_path == {x, y1, y}:
                leap = (u, v)
                outcomes.append(2)
                break

    complement_path = None
    if length == 3:
        x1, y1 = vertices[1], vertices[2]
        co = induced_subgraph(complement(g), set(members) | {x1, y1})
        for path in _chordless_paths(co, x1, y1, frozenset(members)):
            if (len(path) - 1) % 2 == 1:
                complement_path = path
                outcomes.append(3)
                break

    return OutcomeReport(
        length=length,
        t_edges=t_edges,
        outcomes=tuple(outcomes),
        leap=leap,
        complement_path=complement_path,
    )
