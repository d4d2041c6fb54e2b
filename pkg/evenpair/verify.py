"""Re-check a result envelope against the graph it claims to describe."""

import logging

from evenpair.coloring import replay_trace, verify_coloring
from evenpair.config import get_settings
from evenpair.dimacs import digest
from evenpair.graph import Graph
from evenpair.models import Coloring, ContractionStep, ContractionTrace
from evenpair.oracles import (
    class_a_witness,
    is_even_pair,
    is_special_even_pair,
    max_clique,
    validate_witness,
)
from evenpair.schemas import (
    ColoringOutcome,
    DiagnosticOutcome,
    PairOutcome,
    ResultEnvelope,
    WitnessOutcome,
    to_internal,
    witness_from_schema,
)
from exceptions.exceptions import EvenPairException, ResultEnvelopeError

logger = logging.getLogger(__name__)


def _check_pair(g: Graph, outcome: PairOutcome) -> list[str]:
    if len(outcome.pair) != 2:
        return ["pair must have two vertices"]
    a, b = (to_internal(v) for v in outcome.pair)
    if a not in g or b not in g or a == b:
        return [f"pair {outcome.pair} is not two distinct vertices of the graph"]
    if g.has_edge(a, b):
        return [f"pair {outcome.pair} is adjacent"]

    settings = get_settings()
    if g.n <= settings.snake_oracle_max_n:
        if not is_special_even_pair(g, a, b):
            return [f"pair {outcome.pair} is not a special even pair"]
    elif g.n <= settings.path_oracle_max_n:
        if not is_even_pair(g, a, b):
            return [f"pair {outcome.pair} is not an even pair"]
    else:
        logger.warning(f"Graph on {g.n} vertices is beyond oracle bounds, only adjacency was checked")
    return []


def _check_coloring(g: Graph, outcome: ColoringOutcome) -> list[str]:
    if outcome.original_n != g.n or len(outcome.colors) != g.n:
        return [f"coloring covers {len(outcome.colors)} vertices, graph has {g.n}"]
    problems = []
    coloring = Coloring.from_colors(dict(zip(g.vertices, outcome.colors)))
    if not verify_coloring(g, coloring):
        problems.append("coloring is not proper")
    if coloring.num_colors != outcome.num_colors:
        problems.append(f"num_colors is {outcome.num_colors}, coloring uses {coloring.num_colors}")
    omega = len(max_clique(g))
    if coloring.num_colors != omega:
        problems.append(f"coloring uses {coloring.num_colors} colors, clique number is {omega}")

    trace = ContractionTrace(
        steps=tuple(
            ContractionStep(
                merged=(to_internal(step.merged[0]), to_internal(step.merged[1])),
                fresh=to_internal(step.fresh),
                graph_size_after=step.graph_size_after,
            )
            for step in outcome.trace
        ),
        original_n=outcome.original_n,
    )
    try:
        replay_trace(g, trace)
    except EvenPairException as e:
        problems.append(f"trace does not replay: {e}")
    return problems


def _check_witness(g: Graph, outcome: WitnessOutcome) -> list[str]:
    if outcome.in_class:
        if outcome.witness is not None:
            return ["in-class verdict carries a witness"]
        witness = class_a_witness(g)
        if witness is not None:
            return [f"graph contains a {witness.kind.value}"]
        return []
    if outcome.witness is None:
        return ["out-of-class verdict without a witness"]
    try:
        witness = witness_from_schema(outcome.witness)
        valid = validate_witness(g, witness)
    except EvenPairException as e:
        return [f"witness does not check: {e}"]
    return [] if valid else ["witness does not check"]


def _check_diagnostic(g: Graph, outcome: DiagnosticOutcome) -> list[str]:
    if outcome.error != "NotInClassAError":
        return [f"{outcome.error} diagnostics carry no checkable claim"]
    if class_a_witness(g) is None:
        return ["diagnostic claims the graph is outside the class, no witness found"]
    return []


def verify_envelope(g: Graph, envelope: ResultEnvelope) -> list[str]:
    """Problems found with the envelope; an empty list means it checks out."""
    problems = []
    if envelope.input_digest is not None and envelope.input_digest != digest(g):
        problems.append("input digest does not match the graph")

    outcome = envelope.outcome
    if isinstance(outcome, PairOutcome):
        problems += _check_pair(g, outcome)
    elif isinstance(outcome, ColoringOutcome):
        problems += _check_coloring(g, outcome)
    elif isinstance(outcome, WitnessOutcome):
        problems += _check_witness(g, outcome)
    elif isinstance(outcome, DiagnosticOutcome):
        problems += _check_diagnostic(g, outcome)
    else:
        raise ResultEnvelopeError(f"{outcome.kind} envelopes cannot be verified against a graph")
    return problems
