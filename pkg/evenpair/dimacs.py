"""Graph file formats: DIMACS col (1-based) and plain edge lists (0-based)."""

import hashlib
import logging

from evenpair.graph import Graph
from exceptions.exceptions import GraphFormatError

logger = logging.getLogger(__name__)


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(line_no, f"{what} must be an integer, got {token!r}")


def _add_edge(edges: set[tuple[int, int]], n: int, u: int, v: int, line_no: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphFormatError(line_no, f"edge ({u}, {v}) has a vertex out of range")
    if u == v:
        raise GraphFormatError(line_no, f"self-loop on vertex {u}")
    edges.add((min(u, v), max(u, v)))


def _check_edge_count(declared: int, edges: set[tuple[int, int]]) -> None:
    if declared != len(edges):
        logger.warning(f"Header declares {declared} edges, found {len(edges)} distinct edges")


def parse_dimacs(text: str) -> Graph:
    n = None
    declared = 0
    edges: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError(line_no, "second problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError(line_no, "expected 'p edge <n> <m>'")
            n = _parse_int(tokens[2], line_no, "vertex count")
            declared = _parse_int(tokens[3], line_no, "edge count")
            if n < 0 or declared < 0:
                raise GraphFormatError(line_no, "counts must be non-negative")
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError(line_no, "edge line before the problem line")
            if len(tokens) != 3:
                raise GraphFormatError(line_no, "expected 'e <u> <v>'")
            u = _parse_int(tokens[1], line_no, "vertex")
            v = _parse_int(tokens[2], line_no, "vertex")
            _add_edge(edges, n, u - 1, v - 1, line_no)
        else:
            raise GraphFormatError(line_no, f"unknown line type {tokens[0]!r}")

    if n is None:
        raise GraphFormatError(0, "missing problem line")
    _check_edge_count(declared, edges)
    return Graph.from_edges(n, sorted(edges))


def _compact(g: Graph) -> dict[int, int]:
    # contracted graphs carry sparse ids; files always number 0..n-1 by rank
    return {v: i for i, v in enumerate(g.vertices)}


def write_dimacs(g: Graph) -> str:
    """Canonical DIMACS text: problem line then edges in ascending order, no comments."""
    rank = _compact(g)
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {rank[u] + 1} {rank[v] + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    declared = 0
    edges: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if not content:
            continue
        if len(content) != 2:
            raise GraphFormatError(line_no, "expected two integers")
        first = _parse_int(content[0], line_no, "value")
        second = _parse_int(content[1], line_no, "value")
        if n is None:
            if first < 0 or second < 0:
                raise GraphFormatError(line_no, "counts must be non-negative")
            n, declared = first, second
            continue
        _add_edge(edges, n, first, second, line_no)

    if n is None:
        raise GraphFormatError(0, "missing 'n m' header line")
    _check_edge_count(declared, edges)
    return Graph.from_edges(n, sorted(edges))


def write_edge_list(g: Graph) -> str:
    rank = _compact(g)
    lines = [f"{g.n} {g.m}"]
    lines += [f"{rank[u]} {rank[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def is_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        tokens = raw.split()
        if tokens and tokens[0] in ("p", "c", "e"):
            return True
    return False


def read_graph(text: str) -> Graph:
    return parse_dimacs(text) if is_dimacs(text) else parse_edge_list(text)


def digest(g: Graph) -> str:
    return hashlib.sha256(write_dimacs(g).encode()).hexdigest()
