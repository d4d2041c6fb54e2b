"""Optimal coloring by repeated special-even-pair contraction."""

import logging
from typing import Optional

from evenpair.config import get_settings
from evenpair.graph import Graph, connected_components, contract, is_disjoint_union_of_cliques
from evenpair.models import Coloring, ContractionStep, ContractionTrace
from evenpair.oracles import class_a_witness
from evenpair.special_pair import find_special_even_pair
from exceptions.exceptions import ColoringError, NotInClassAError, PreconditionViolationError

logger = logging.getLogger(__name__)


def color_disjoint_cliques(g: Graph) -> Coloring:
    if not is_disjoint_union_of_cliques(g):
        raise PreconditionViolationError("color_disjoint_cliques", "graph is not a disjoint union of cliques")
    colors = {}
    for component in connected_components(g):
        for index, v in enumerate(sorted(component)):
            colors[v] = index
    return Coloring.from_colors(colors)


def verify_coloring(g: Graph, c: Coloring) -> bool:
    for v in g.vertices:
        if v not in c.colors:
            raise ColoringError(f"vertex {v} has no color")
    return all(c.colors[u] != c.colors[v] for u, v in g.edges())


def lift_coloring(
    trace: ContractionTrace, terminal_coloring: Coloring, g: Optional[Graph] = None
) -> Coloring:
    """Undo the contractions: both merged vertices take the color of the merged one.

    When the original graph is given the lifted coloring is checked against it.
    """
    colors = dict(terminal_coloring.colors)
    for step in reversed(trace.steps):
        if step.fresh not in colors:
            raise ColoringError(f"contracted vertex {step.fresh} has no color")
        color = colors.pop(step.fresh)
        x, y = step.merged
        if x in colors or y in colors:
            raise ColoringError(f"vertex of merged pair {step.merged} colored twice")
        colors[x] = color
        colors[y] = color

    if len(colors) != trace.original_n:
        raise ColoringError(f"lifted coloring covers {len(colors)} of {trace.original_n} vertices")
    lifted = Coloring.from_colors(colors)
    if g is not None and not verify_coloring(g, lifted):
        raise ColoringError("lifted coloring is not proper")
    return lifted


def replay_trace(g: Graph, trace: ContractionTrace) -> list[Graph]:
    graphs = [g]
    current = g
    for step in trace.steps:
        current, fresh = contract(current, *step.merged)
        if fresh != step.fresh or current.n != step.graph_size_after:
            raise ColoringError(f"trace step {step.merged} does not replay")
        graphs.append(current)
    if not is_disjoint_union_of_cliques(current):
        raise ColoringError("trace does not end in a disjoint union of cliques")
    return graphs


def _check_in_class(g: Graph, step: int) -> None:
    witness = class_a_witness(g)
    if witness is not None:
        raise NotInClassAError(
            f"{witness.kind.value} found before contraction step {step}",
            {"step": step, "witness": witness.model_dump(mode="json")},
        )


def color(g: Graph, verify_trace: Optional[bool] = None) -> tuple[Coloring, ContractionTrace]:
    """Color g with omega(g) colors, returning the coloring and its contraction trace.

    With ``verify_trace`` unset, g and each intermediate graph are checked for
    class membership when g has at most ``verify_trace_max_n`` vertices.
    """
    if verify_trace is None:
        verify_trace = g.n <= get_settings().verify_trace_max_n

    current = g
    steps: list[ContractionStep] = []
    while not is_disjoint_union_of_cliques(current):
        if verify_trace:
            _check_in_class(current, len(steps))
        result = find_special_even_pair(current)
        x, y = result.pair
        current, fresh = contract(current, x, y)
        steps.append(ContractionStep(merged=(x, y), fresh=fresh, graph_size_after=current.n))
        logger.info(f"Contracted {x} and {y} into {fresh}, {current.n} vertices left")

    trace = ContractionTrace(steps=tuple(steps), original_n=g.n)
    coloring = lift_coloring(trace, color_disjoint_cliques(current), g)
    logger.info(f"Colored {g.n} vertices with {coloring.num_colors} colors after {len(steps)} contractions")
    return coloring, trace
