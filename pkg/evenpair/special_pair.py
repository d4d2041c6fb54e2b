"""Constructive search for a special even pair.

Each level computes a maximal interesting set T. Without an outer path the
search descends into G[C(T)]; with one, the pair is read off the maximal
elements of the two precedence orders on the attachment sets. Every
structural fact the construction relies on is checked as it is used, so an
input outside the class ends in a NotInClassAError instead of a wrong pair.
"""

import logging
from itertools import combinations
from typing import Literal

from evenpair.graph import (
    Graph,
    VertexId,
    complete_set,
    induced_subgraph,
    is_clique,
    is_co_connected,
    is_disjoint_union_of_cliques,
    is_simplicial,
    shortest_path,
)
from evenpair.models import (
    EvenPairCase,
    EvenPairResult,
    InterestingSetContext,
    OuterPathContext,
    Path,
    PrecedenceOrder,
)
from exceptions.exceptions import (
    CliqueInputError,
    DisjointCliquesError,
    EmptyVertexSetError,
    NotInClassAError,
    PreconditionViolationError,
)

logger = logging.getLogger(__name__)


def maximal_interesting_set(g: Graph) -> InterestingSetContext:
    """Grow T from the lowest-id non-simplicial vertex until it is maximal.

    A vertex w outside T and C(T) whose neighbors in C(T) are not a clique
    is added, lowest id first, and C(T) shrinks to C(T) & N(w).
    """
    if is_disjoint_union_of_cliques(g):
        raise DisjointCliquesError()

    start = next(v for v in g.vertices if not is_simplicial(g, v))
    t = {start}
    c = g.adj(start)
    provenance = [start]

    while True:
        for w in g.vertices:
            if w in t or w in c:
                continue
            if not is_clique(g, g.adj(w) & c):
                t.add(w)
                c = c & g.adj(w)
                provenance.append(w)
                logger.debug(f"Added {w} to T, |C(T)| is now {len(c)}")
                break
        else:
            break

    logger.info(f"Maximal interesting set of size {len(t)} with |C(T)|={len(c)}")
    return InterestingSetContext(
        t=tuple(sorted(t)), c=tuple(sorted(c)), provenance=tuple(provenance)
    )


def shortest_outer_path(g: Graph, ctx: InterestingSetContext) -> Path | None:
    """Shortest chordless path between non-adjacent vertices of C(T) with interior outside T and C(T).

    Candidate endpoint pairs are tried in ascending order and only a strictly
    shorter path replaces the current one.
    """
    t = frozenset(ctx.t)
    c = frozenset(ctx.c)
    best: Path | None = None
    for u, v in combinations(ctx.c, 2):
        if g.has_edge(u, v):
            continue
        path = shortest_path(g, u, v, forbidden=t | (c - {u, v}))
        if path is not None and (best is None or path.length < best.length):
            best = path
    return best


def _violation(diagnostic: str, **context) -> NotInClassAError:
    return NotInClassAError(diagnostic, context)


def attachment_sets(g: Graph, ctx: InterestingSetContext, z: Path) -> OuterPathContext:
    """A: vertices of C(T) seeing z1 and no other interior vertex; B mirrors it at zn."""
    interior = z.interior
    if not interior:
        raise PreconditionViolationError("attachment_sets", "outer path has no interior")
    first, last = interior[0], interior[-1]
    a_set = []
    b_set = []
    for v in ctx.c:
        seen = g.adj(v) & frozenset(interior)
        if seen == {first}:
            a_set.append(v)
        if seen == {last}:
            b_set.append(v)

    opc = OuterPathContext(
        z_path=z, z_interior=interior, a_set=tuple(a_set), b_set=tuple(b_set)
    )
    if not a_set or not b_set:
        raise _violation("attachment set is empty", a_set=a_set, b_set=b_set, z_path=z.vertices)
    if set(a_set) & set(b_set):
        raise _violation("attachment sets intersect", a_set=a_set, b_set=b_set)
    if not is_clique(g, a_set) or not is_clique(g, b_set):
        raise _violation("attachment set is not a clique", a_set=a_set, b_set=b_set)
    for u in a_set:
        if g.adj(u) & frozenset(b_set):
            raise _violation("edge between attachment sets", a_set=a_set, b_set=b_set)
    return opc


def precedence_order(
    g: Graph,
    ctx: InterestingSetContext,
    opc: OuterPathContext,
    side: Literal["A", "B"],
) -> PrecedenceOrder:
    """u < v when some odd chordless path from u into the opposite set has v as second vertex.

    The search for each (u, v, w) is a shortest v-w path avoiding u, the
    neighbors of u other than v, and the opposite set except w. Such a path
    must be even, so the path with u prepended is odd.
    """
    own, other = (opc.a_set, opc.b_set) if side == "A" else (opc.b_set, opc.a_set)
    other_set = frozenset(other)
    pairs = []
    for u in own:
        for v in own:
            if u == v:
                continue
            base = (g.adj(u) - {v}) | {u}
            for w in other:
                forbidden = base | (other_set - {w})
                if v in forbidden or w in forbidden:
                    continue
                path = shortest_path(g, v, w, forbidden=forbidden)
                if path is None:
                    continue
                if path.length % 2 == 1:
                    raise _violation(
                        "odd path in precedence search",
                        side=side,
                        u=u,
                        v=v,
                        path=path.vertices,
                    )
                logger.debug(f"{u} <_{side} {v} via {path.vertices}")
                pairs.append((u, v))
                break

    order = PrecedenceOrder(side=side, ground=tuple(own), pairs=tuple(pairs))
    if not order.is_antisymmetric():
        raise _violation("precedence order is not antisymmetric", side=side, pairs=pairs)
    if not order.is_transitive():
        raise _violation("precedence order is not transitive", side=side, pairs=pairs)
    return order


def maximal_element(order: PrecedenceOrder) -> VertexId:
    if not order.ground:
        raise EmptyVertexSetError("maximal_element")
    for v in sorted(order.ground):
        if not order.successors(v):
            return v
    raise _violation("precedence order has no maximal element", side=order.side)


def check_case_two_structure(
    g: Graph,
    ctx: InterestingSetContext,
    opc: OuterPathContext,
    order_a: PrecedenceOrder,
    order_b: PrecedenceOrder,
) -> None:
    """Re-check every structural fact of the outer-path case in one place."""
    z = opc.z_path
    t = frozenset(ctx.t)
    c = frozenset(ctx.c)
    if z.length % 2 == 1 or z.length < 4:
        raise _violation("outer path is odd or shorter than 4", z_path=z.vertices)
    if z.start not in c or z.end not in c or g.has_edge(z.start, z.end):
        raise _violation("outer path endpoints are not non-adjacent vertices of C(T)", z_path=z.vertices)
    if frozenset(z.interior) & (t | c):
        raise _violation("outer path interior meets T or C(T)", z_path=z.vertices)
    if z.start not in opc.a_set or z.end not in opc.b_set:
        raise _violation("outer path endpoints missing from A or B", z_path=z.vertices)
    a_set, b_set = frozenset(opc.a_set), frozenset(opc.b_set)
    if a_set & b_set or not is_clique(g, a_set) or not is_clique(g, b_set):
        raise _violation("A and B are not disjoint cliques", a_set=opc.a_set, b_set=opc.b_set)
    if any(g.adj(u) & b_set for u in a_set):
        raise _violation("edge between A and B", a_set=opc.a_set, b_set=opc.b_set)
    for order, ground in ((order_a, opc.a_set), (order_b, opc.b_set)):
        if set(order.ground) != set(ground):
            raise _violation("precedence order on the wrong ground set", side=order.side)
        if not order.is_antisymmetric() or not order.is_transitive():
            raise _violation("precedence order is not a strict partial order", side=order.side)


def _lowest_non_adjacent_pair(g: Graph) -> tuple[VertexId, VertexId]:
    for u, v in combinations(g.vertices, 2):
        if not g.has_edge(u, v):
            return (u, v)
    raise CliqueInputError(g.n)


def find_special_even_pair(g: Graph) -> EvenPairResult:
    """Return a special even pair of g, which must not be a clique.

    The descent into G[C(T)] is iterative; the vertex count strictly drops
    at each level, so the loop ends after at most n levels.
    """
    if is_clique(g, g.vertices):
        raise CliqueInputError(g.n)

    contexts: list[InterestingSetContext] = []
    current = g
    depth = 0
    while True:
        if is_disjoint_union_of_cliques(current):
            pair = _lowest_non_adjacent_pair(current)
            case = EvenPairCase.DISJOINT_CLIQUES if depth == 0 else EvenPairCase.CASE1_RECURSION
            logger.info(f"Even pair {pair} from a disjoint union of cliques at depth {depth}")
            return EvenPairResult(
                pair=pair, case=case, interesting_sets=tuple(contexts), recursion_depth=depth
            )

        ctx = maximal_interesting_set(current)
        if not is_co_connected(current, ctx.t):
            raise _violation("interesting set is not co-connected", t=ctx.t)
        if frozenset(ctx.c) != complete_set(current, ctx.t):
            raise _violation("C(T) out of sync with T", t=ctx.t)
        contexts.append(ctx)

        z = shortest_outer_path(current, ctx)
        if z is None:
            if is_clique(current, ctx.c):
                raise _violation("G[C(T)] is a clique", t=ctx.t, c=ctx.c, depth=depth)
            logger.info(f"No outer path at depth {depth}, descending into C(T) of size {len(ctx.c)}")
            current = induced_subgraph(current, ctx.c)
            depth += 1
            continue

        if z.length % 2 == 1 or z.length < 4:
            raise _violation(
                "outer path is odd or shorter than 4", z_path=z.vertices, t=ctx.t, depth=depth
            )
        logger.info(f"Outer path {z.vertices} of length {z.length} at depth {depth}")
        opc = attachment_sets(current, ctx, z)
        order_a = precedence_order(current, ctx, opc, "A")
        order_b = precedence_order(current, ctx, opc, "B")
        check_case_two_structure(current, ctx, opc, order_a, order_b)
        pair = (maximal_element(order_a), maximal_element(order_b))
        logger.info(f"Even pair {pair} from the outer-path case at depth {depth}")
        return EvenPairResult(
            pair=pair,
            case=EvenPairCase.CASE2_OUTER_PATH,
            interesting_sets=tuple(contexts),
            outer_path=opc,
            order_a=order_a,
            order_b=order_b,
            recursion_depth=depth,
        )
