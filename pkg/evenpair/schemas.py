"""JSON result envelopes.

Vertices are numbered from 1 in every envelope, matching DIMACS files;
internal ids are shifted at this boundary only.
"""

import json
from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from evenpair.models import (
    Coloring,
    ContractionTrace,
    EvenPairResult,
    OutcomeReport,
    Path,
    Witness,
    WitnessKind,
)
from evenpair.special_pair import maximal_element
from exceptions.exceptions import EvenPairException, NotInClassAError, ResultEnvelopeError

SCHEMA_VERSION = "1.0"


def to_external(v: int) -> int:
    return v + 1


def to_internal(v: int) -> int:
    return v - 1


def _ext(vertices) -> list[int]:
    return [to_external(v) for v in vertices]


class WitnessSchema(BaseModel):
    kind: WitnessKind
    vertices: list[int]
    paths: list[list[int]] = []


class OrderSchema(BaseModel):
    ground: list[int]
    pairs: list[list[int]]
    maximal: int


class InterestingSetSchema(BaseModel):
    t: list[int]
    c: list[int]
    provenance: list[int]


class OuterPathSchema(BaseModel):
    z_path: list[int]
    a_set: list[int]
    b_set: list[int]


class PairOutcome(BaseModel):
    kind: Literal["Pair"] = "Pair"
    pair: list[int]
    case: str
    recursion_depth: int
    interesting_sets: list[InterestingSetSchema] = []
    outer_path: Optional[OuterPathSchema] = None
    order_a: Optional[OrderSchema] = None
    order_b: Optional[OrderSchema] = None
    audit_special: Optional[bool] = None


class StepSchema(BaseModel):
    merged: list[int]
    fresh: int
    graph_size_after: int


class ColoringOutcome(BaseModel):
    kind: Literal["Coloring"] = "Coloring"
    colors: list[int] = Field(description="color of vertex i + 1 at position i")
    num_colors: int
    clique_number: Optional[int] = None
    chromatic_number: Optional[int] = None
    trace: list[StepSchema] = []
    original_n: int


class WitnessOutcome(BaseModel):
    kind: Literal["Witness"] = "Witness"
    in_class: bool
    witness: Optional[WitnessSchema] = None


class DiagnosticOutcome(BaseModel):
    kind: Literal["Diagnostic"] = "Diagnostic"
    error: str
    message: str
    context: dict[str, Any] = {}


class OracleOutcome(BaseModel):
    kind: Literal["Oracle"] = "Oracle"
    op: str
    value: Any = None


class CorpusOutcome(BaseModel):
    kind: Literal["Corpus"] = "Corpus"
    instances: int
    checked: int
    skipped: int
    failures: list[dict[str, Any]] = []


class VerificationOutcome(BaseModel):
    kind: Literal["Verification"] = "Verification"
    verified_command: str
    valid: bool
    problems: list[str] = []


Outcome = Annotated[
    Union[
        PairOutcome,
        ColoringOutcome,
        WitnessOutcome,
        DiagnosticOutcome,
        OracleOutcome,
        CorpusOutcome,
        VerificationOutcome,
    ],
    Field(discriminator="kind"),
]


class ResultEnvelope(BaseModel):
    schema_version: str = SCHEMA_VERSION
    command: str
    input_digest: Optional[str] = None
    outcome: Outcome
    timings: Optional[dict[str, float]] = None


def witness_schema(witness: Witness) -> WitnessSchema:
    return WitnessSchema(
        kind=witness.kind,
        vertices=_ext(witness.vertices),
        paths=[_ext(path.vertices) for path in witness.paths],
    )


def witness_from_schema(schema: WitnessSchema) -> Witness:
    return Witness(
        kind=schema.kind,
        vertices=tuple(to_internal(v) for v in schema.vertices),
        paths=tuple(Path(vertices=tuple(to_internal(v) for v in p)) for p in schema.paths),
    )


def pair_outcome(result: EvenPairResult, audit_special: Optional[bool] = None) -> PairOutcome:
    def order(o) -> Optional[OrderSchema]:
        if o is None:
            return None
        return OrderSchema(
            ground=_ext(o.ground),
            pairs=[_ext(p) for p in o.pairs],
            maximal=to_external(maximal_element(o)),
        )

    outer = None
    if result.outer_path is not None:
        opc = result.outer_path
        outer = OuterPathSchema(
            z_path=_ext(opc.z_path.vertices), a_set=_ext(opc.a_set), b_set=_ext(opc.b_set)
        )
    return PairOutcome(
        pair=_ext(result.pair),
        case=result.case.value,
        recursion_depth=result.recursion_depth,
        interesting_sets=[
            InterestingSetSchema(t=_ext(ctx.t), c=_ext(ctx.c), provenance=_ext(ctx.provenance))
            for ctx in result.interesting_sets
        ],
        outer_path=outer,
        order_a=order(result.order_a),
        order_b=order(result.order_b),
        audit_special=audit_special,
    )


def coloring_outcome(
    coloring: Coloring,
    trace: ContractionTrace,
    vertices: tuple[int, ...],
    clique_number: Optional[int] = None,
    chromatic_number: Optional[int] = None,
) -> ColoringOutcome:
    return ColoringOutcome(
        colors=[coloring.colors[v] for v in vertices],
        num_colors=coloring.num_colors,
        clique_number=clique_number,
        chromatic_number=chromatic_number,
        trace=[
            StepSchema(
                merged=_ext(step.merged),
                fresh=to_external(step.fresh),
                graph_size_after=step.graph_size_after,
            )
            for step in trace.steps
        ],
        original_n=trace.original_n,
    )


def witness_outcome(witness: Optional[Witness]) -> WitnessOutcome:
    if witness is None:
        return WitnessOutcome(in_class=True)
    return WitnessOutcome(in_class=False, witness=witness_schema(witness))


def diagnostic_outcome(exc: EvenPairException) -> DiagnosticOutcome:
    context: dict[str, Any] = {}
    if isinstance(exc, NotInClassAError):
        context = json.loads(json.dumps(exc.context, default=str))
        context["diagnostic"] = exc.diagnostic
    return DiagnosticOutcome(error=type(exc).__name__, message=str(exc), context=context)


def outcome_report_value(report: OutcomeReport) -> dict[str, Any]:
    value = report.model_dump(mode="json")
    if report.leap is not None:
        value["leap"] = _ext(report.leap)
    if report.complement_path is not None:
        value["complement_path"] = _ext(report.complement_path)
    return value


def custom_json_dumps(envelope: ResultEnvelope) -> str:
    """Deterministic JSON: sorted keys, unset optionals left out."""
    return json.dumps(envelope.model_dump(mode="json", exclude_none=True), sort_keys=True, indent=2)


def load_envelope(text: str) -> ResultEnvelope:
    try:
        return ResultEnvelope.model_validate_json(text)
    except ValidationError as e:
        raise ResultEnvelopeError(str(e))


def envelope_schema() -> dict[str, Any]:
    return ResultEnvelope.model_json_schema()
