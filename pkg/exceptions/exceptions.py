import logging
from typing import Any, Iterable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class EvenPairException(Exception):
    """Base exception for graph, oracle and pipeline errors."""

    pass


class UnknownVertexError(EvenPairException):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Vertex {vertex} is not in the graph")


class AdjacentVerticesError(EvenPairException):
    def __init__(self, x: int, y: int, operation: str = "contract"):
        self.x = x
        self.y = y
        super().__init__(f"Cannot {operation} adjacent vertices {x} and {y}")


class EmptyVertexSetError(EvenPairException):
    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a non-empty vertex set")


class CliqueInputError(EvenPairException):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"Graph on {n} vertices is a clique and has no even pair")


class DisjointCliquesError(EvenPairException):
    def __init__(self):
        super().__init__("Graph is a disjoint union of cliques and has no interesting set")


class NotInClassAError(EvenPairException):
    """Raised when an internal consistency check proves the input is outside the class."""

    def __init__(self, diagnostic: str, context: dict[str, Any] | None = None):
        self.diagnostic = diagnostic
        self.context = context or {}
        super().__init__(f"Input graph is not in class A: {diagnostic}")


class OracleBoundExceededError(EvenPairException):
    def __init__(self, oracle: str, size: int, bound: int):
        self.oracle = oracle
        self.size = size
        self.bound = bound
        super().__init__(f"Oracle {oracle} refuses instance of size {size} (bound {bound})")


class PathCapExceededError(OracleBoundExceededError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__("chordless-path enumeration", cap + 1, cap)


class PreconditionViolationError(EvenPairException):
    def __init__(self, check: str, message: str):
        self.check = check
        super().__init__(f"Precondition of {check} violated: {message}")


class ColoringError(EvenPairException):
    def __init__(self, message: str):
        super().__init__(f"Invalid coloring: {message}")


class GraphFormatError(EvenPairException):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"Line {line_no}: {message}")


class UnknownInstanceError(EvenPairException):
    def __init__(self, name: str, known: Iterable[str] = ()):
        self.name = name
        names = ", ".join(sorted(known))
        super().__init__(f"Unknown instance {name!r}; available: {names}")


class ConfigurationError(EvenPairException):
    def __init__(self, variable: str, value: str):
        super().__init__(f"Invalid value {value!r} for {variable}")


class ResultEnvelopeError(EvenPairException):
    def __init__(self, message: str):
        super().__init__(f"Malformed result envelope: {message}")


_EXIT_CODES: list[tuple[type[BaseException], int]] = [
    (OracleBoundExceededError, EXIT_USAGE),
    (GraphFormatError, EXIT_USAGE),
    (UnknownInstanceError, EXIT_USAGE),
    (ConfigurationError, EXIT_USAGE),
    (ResultEnvelopeError, EXIT_USAGE),
    (NotInClassAError, EXIT_FAILURE),
    (EvenPairException, EXIT_USAGE),
]


def exit_code_for(exc: BaseException) -> int:
    for exc_type, code in _EXIT_CODES:
        if isinstance(exc, exc_type):
            return code
    return EXIT_USAGE


def handle_exception(exc: BaseException) -> int:
    if isinstance(exc, NotInClassAError):
        logger.error(f"Class A violation: {exc.diagnostic}")
    elif isinstance(exc, EvenPairException):
        logger.error(f"Even pair error: {str(exc)}")
    else:
        logger.error(f"Unexpected error: {str(exc)}")
    return exit_code_for(exc)
