import argparse
import json
import logging
import sys
import time
from pathlib import Path as FilePath
from typing import Any, Callable, Optional, Sequence

from evenpair.coloring import color
from evenpair.config import get_settings
from evenpair.corpus import run_corpus
from evenpair.dimacs import digest, read_graph, write_dimacs, write_edge_list
from evenpair.generators import generate
from evenpair.graph import Graph
from evenpair.models import GenSpec, Snake
from evenpair.oracles import (
    check_hole_parity_lemma,
    check_parity_lemma,
    check_roussel_rubio,
    chromatic_number_exact,
    class_a_witness,
    enumerate_chordless_paths,
    find_long_antihole,
    find_odd_hole,
    find_prism,
    find_proper_snake,
    is_berge,
    is_even_pair,
    is_even_pair_by_extension,
    is_special_even_pair,
    is_two_pair,
    is_weakly_triangulated,
    max_clique,
)
from evenpair.schemas import (
    OracleOutcome,
    ResultEnvelope,
    VerificationOutcome,
    coloring_outcome,
    custom_json_dumps,
    diagnostic_outcome,
    envelope_schema,
    load_envelope,
    outcome_report_value,
    pair_outcome,
    to_external,
    to_internal,
    witness_outcome,
    witness_schema,
)
from evenpair.special_pair import find_special_even_pair
from evenpair.verify import verify_envelope
from exceptions.exceptions import (
    EXIT_FAILURE,
    EXIT_OK,
    NotInClassAError,
    PreconditionViolationError,
    handle_exception,
)

logger = logging.getLogger(__name__)


def _read_text(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    return FilePath(name).read_text()


def _emit(envelope: ResultEnvelope) -> None:
    sys.stdout.write(custom_json_dumps(envelope) + "\n")


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.start = time.perf_counter()

    def timings(self) -> Optional[dict[str, float]]:
        if not self.enabled:
            return None
        return {"total_s": round(time.perf_counter() - self.start, 6)}


def cmd_classify(args: argparse.Namespace, clock: _Clock) -> int:
    g = read_graph(_read_text(args.file))
    witness = class_a_witness(g)
    if witness is None:
        logger.info("Graph is in the class")
    else:
        logger.info(f"Graph is outside the class: {witness.kind.value} on {len(witness.vertices)} vertices")
    _emit(
        ResultEnvelope(
            command="classify",
            input_digest=digest(g),
            outcome=witness_outcome(witness),
            timings=clock.timings(),
        )
    )
    return EXIT_OK if witness is None else EXIT_FAILURE


def _run_with_diagnostic(
    command: str, g: Graph, clock: _Clock, body: Callable[[], tuple[Any, int]]
) -> int:
    try:
        outcome, code = body()
    except NotInClassAError as e:
        handle_exception(e)
        outcome, code = diagnostic_outcome(e), EXIT_FAILURE
    _emit(
        ResultEnvelope(
            command=command, input_digest=digest(g), outcome=outcome, timings=clock.timings()
        )
    )
    return code


def cmd_evenpair(args: argparse.Namespace, clock: _Clock) -> int:
    g = read_graph(_read_text(args.file))

    def body():
        result = find_special_even_pair(g)
        audit = None
        if args.audit:
            audit = is_special_even_pair(g, *result.pair)
            logger.info(f"Audit of pair {result.pair}: {'special' if audit else 'NOT special'}")
        return pair_outcome(result, audit), EXIT_FAILURE if audit is False else EXIT_OK

    return _run_with_diagnostic("evenpair", g, clock, body)


def cmd_color(args: argparse.Namespace, clock: _Clock) -> int:
    g = read_graph(_read_text(args.file))

    def body():
        coloring, trace = color(g, verify_trace=args.verify_trace)
        omega = len(max_clique(g))
        chi = None
        if g.n <= get_settings().chromatic_oracle_max_n:
            chi = chromatic_number_exact(g)
        optimal = coloring.num_colors == omega and (chi is None or chi == omega)
        if not optimal:
            logger.error(f"Coloring uses {coloring.num_colors} colors, clique number {omega}")
        outcome = coloring_outcome(coloring, trace, g.vertices, omega, chi)
        return outcome, EXIT_OK if optimal else EXIT_FAILURE

    return _run_with_diagnostic("color", g, clock, body)


def cmd_verify(args: argparse.Namespace, clock: _Clock) -> int:
    g = read_graph(_read_text(args.file))
    envelope = load_envelope(_read_text(args.result))
    problems = verify_envelope(g, envelope)
    for problem in problems:
        logger.error(f"Verification failed: {problem}")
    _emit(
        ResultEnvelope(
            command="verify",
            input_digest=digest(g),
            outcome=VerificationOutcome(
                verified_command=envelope.command, valid=not problems, problems=problems
            ),
            timings=clock.timings(),
        )
    )
    return EXIT_OK if not problems else EXIT_FAILURE


def cmd_gen(args: argparse.Namespace, clock: _Clock) -> int:
    spec = GenSpec.model_validate_json(_read_text(args.spec))
    g = generate(spec)
    if g is None:
        logger.error(f"Generator {spec.family.value} gave up after {spec.max_tries} tries")
        return EXIT_FAILURE
    text = write_edge_list(g) if args.format == "edgelist" else write_dimacs(g)
    if args.output:
        FilePath(args.output).write_text(text)
        logger.info(f"Wrote graph with {g.n} vertices and {g.m} edges to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _snake_value(snake: Optional[Snake]) -> Optional[dict[str, Any]]:
    if snake is None:
        return None
    value: dict[str, Any] = {"a": to_external(snake.a), "b": to_external(snake.b), "proper": snake.is_proper}
    for name in ("s1", "s2", "s3", "s4"):
        value[name] = [to_external(v) for v in getattr(snake, name).vertices]
    return value


def _witness_value(witness) -> Optional[dict[str, Any]]:
    return None if witness is None else witness_schema(witness).model_dump(mode="json")


_GRAPH_ORACLES: dict[str, Callable[[Graph], Any]] = {
    "odd-hole": lambda g: _witness_value(find_odd_hole(g)),
    "antihole": lambda g: _witness_value(find_long_antihole(g)),
    "prism": lambda g: _witness_value(find_prism(g)),
    "class-a": lambda g: _witness_value(class_a_witness(g)),
    "weakly-triangulated": is_weakly_triangulated,
    "berge": is_berge,
    "max-clique": lambda g: sorted(to_external(v) for v in max_clique(g)),
    "chromatic-number": chromatic_number_exact,
}

_PAIR_ORACLES: dict[str, Callable[[Graph, int, int], Any]] = {
    "even-pair": is_even_pair,
    "two-pair": is_two_pair,
    "special-even-pair": is_special_even_pair,
    "even-pair-extension": is_even_pair_by_extension,
    "proper-snake": lambda g, a, b: _snake_value(find_proper_snake(g, a, b)),
    "chordless-paths": lambda g, x, y: [
        [to_external(v) for v in path.vertices] for path in enumerate_chordless_paths(g, x, y)
    ],
}

_PATH_ORACLES: dict[str, Callable[[Graph, list[int], list[int]], Any]] = {
    "parity-lemma": check_parity_lemma,
    "hole-parity": check_hole_parity_lemma,
    "roussel-rubio": lambda g, p, t: outcome_report_value(check_roussel_rubio(g, p, t)),
}

ORACLE_OPS = sorted([*_GRAPH_ORACLES, *_PAIR_ORACLES, *_PATH_ORACLES])


def run_oracle(g: Graph, op: str, vertices: Sequence[int], t: Sequence[int]) -> Any:
    """Run one oracle; ``vertices`` and ``t`` are 1-based."""
    internal = [to_internal(v) for v in vertices]
    if op in _GRAPH_ORACLES:
        return _GRAPH_ORACLES[op](g)
    if op in _PAIR_ORACLES:
        if len(internal) != 2:
            raise PreconditionViolationError(op, "exactly two vertices are required")
        return _PAIR_ORACLES[op](g, *internal)
    if not t:
        raise PreconditionViolationError(op, "--t is required")
    return _PATH_ORACLES[op](g, internal, [to_internal(v) for v in t])


def cmd_oracle(args: argparse.Namespace, clock: _Clock) -> int:
    g = read_graph(_read_text(args.file))
    value = run_oracle(g, args.op, args.vertices, args.t or [])
    _emit(
        ResultEnvelope(
            command="oracle",
            input_digest=digest(g),
            outcome=OracleOutcome(op=args.op, value=value),
            timings=clock.timings(),
        )
    )
    return EXIT_FAILURE if value is False else EXIT_OK


def cmd_corpus(args: argparse.Namespace, clock: _Clock) -> int:
    spec = GenSpec.model_validate_json(_read_text(args.spec))
    outcome = run_corpus(spec, args.count, jobs=args.jobs, two_pair=args.two_pair)
    _emit(ResultEnvelope(command="corpus", outcome=outcome, timings=clock.timings()))
    return EXIT_OK if not outcome.failures else EXIT_FAILURE


def cmd_schema(args: argparse.Namespace, clock: _Clock) -> int:
    sys.stdout.write(json.dumps(envelope_schema(), sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenpair",
        description="Special even pairs and optimal coloring by even-pair contraction",
    )
    parser.add_argument("--timings", action="store_true", help="include wall-clock timings in the output")
    parser.add_argument("--log-level", default=None, help="overrides EVENPAIR_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="class membership verdict with a witness")
    p.add_argument("file", help="DIMACS or edge-list file, '-' for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evenpair", help="find a special even pair")
    p.add_argument("file")
    p.add_argument("--audit", action="store_true", help="check the pair with the exhaustive oracle")
    p.set_defaults(func=cmd_evenpair)

    p = sub.add_parser("color", help="optimal coloring by even-pair contraction")
    p.add_argument("file")
    p.add_argument(
        "--verify-trace",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="check every intermediate graph for class membership",
    )
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="re-check a result envelope")
    p.add_argument("file")
    p.add_argument("result")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an instance from a JSON GenSpec")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--format", choices=["dimacs", "edgelist"], default="dimacs")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="run a single exhaustive oracle")
    p.add_argument("file")
    p.add_argument("--op", required=True, choices=ORACLE_OPS)
    p.add_argument("vertices", nargs="*", type=int, help="1-based vertices, or the path for lemma checks")
    p.add_argument("--t", nargs="+", type=int, default=None, help="1-based vertices of T")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("corpus", help="check a batch of generated instances")
    p.add_argument("spec")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--two-pair", action=argparse.BooleanOptionalAction, default=None)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("schema", help="print the JSON schema of result envelopes")
    p.set_defaults(func=cmd_schema)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        level = args.log_level or get_settings().log_level
        logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO))
        return args.func(args, _Clock(args.timings))
    except Exception as e:
        return handle_exception(e)


if __name__ == "__main__":
    sys.exit(main())
