from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class Path(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]


class WitnessKind(str, Enum):
    ODD_HOLE = "OddHole"
    ANTIHOLE = "Antihole"
    PRISM = "Prism"


class Witness(BaseModel):
    """Certificate that a graph lies outside the class.

    Holes and antiholes list their vertices in cyclic order (for an antihole
    the order is the cycle of the complement). A prism lists its first
    triangle, its second triangle, then the path interiors; ``paths`` holds
    the three connecting paths, the i-th joining the i-th vertex of each
    triangle.
    """

    model_config = ConfigDict(frozen=True)

    kind: WitnessKind
    vertices: tuple[int, ...]
    paths: tuple[Path, ...] = ()


class Snake(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: int
    b: int
    s1: Path
    s2: Path
    s3: Path
    s4: Path

    @property
    def is_proper(self) -> bool:
        return self.s1.length >= 1 or self.s2.length >= 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return (
            self.s1.vertices + self.s2.vertices + self.s3.vertices + self.s4.vertices
        )


class OutcomeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    length: int
    t_edges: int
    outcomes: tuple[int, ...]
    leap: Optional[tuple[int, int]] = None
    complement_path: Optional[tuple[int, ...]] = None


class InterestingSetContext(BaseModel):
    model_config = ConfigDict(frozen=True)

    t: tuple[int, ...]
    c: tuple[int, ...]
    provenance: tuple[int, ...]


class OuterPathContext(BaseModel):
    model_config = ConfigDict(frozen=True)

    z_path: Path
    z_interior: tuple[int, ...]
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]


class PrecedenceOrder(BaseModel):
    model_config = ConfigDict(frozen=True)

    side: Literal["A", "B"]
    ground: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...] = ()

    def successors(self, u: int) -> tuple[int, ...]:
        return tuple(sorted(v for w, v in self.pairs if w == u))

    def is_antisymmetric(self) -> bool:
        relation = set(self.pairs)
        return all((v, u) not in relation for u, v in relation)

    def is_transitive(self) -> bool:
        relation = set(self.pairs)
        for u, v in relation:
            for w in self.successors(v):
                if (u, w) not in relation:
                    return False
        return True


class EvenPairCase(str, Enum):
    DISJOINT_CLIQUES = "DisjointCliques"
    CASE1_RECURSION = "Case1Recursion"
    CASE2_OUTER_PATH = "Case2OuterPath"


class EvenPairResult(BaseModel):
    """A special even pair and the derivation that produced it.

    ``interesting_sets`` holds one context per Case-1 level, outermost first.
    """

    model_config = ConfigDict(frozen=True)

    pair: tuple[int, int]
    case: EvenPairCase
    interesting_sets: tuple[InterestingSetContext, ...] = ()
    outer_path: Optional[OuterPathContext] = None
    order_a: Optional[PrecedenceOrder] = None
    order_b: Optional[PrecedenceOrder] = None
    recursion_depth: int = 0


class ContractionStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    merged: tuple[int, int]
    fresh: int
    graph_size_after: int


class ContractionTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: tuple[ContractionStep, ...] = ()
    terminal: Literal["DisjointCliques"] = "DisjointCliques"
    original_n: int


class Coloring(BaseModel):
    model_config = ConfigDict(frozen=True)

    colors: dict[int, int]
    num_colors: int = Field(ge=0)

    @classmethod
    def from_colors(cls, colors: dict[int, int]) -> "Coloring":
        return cls(colors=dict(sorted(colors.items())), num_colors=len(set(colors.values())))


class GenFamily(str, Enum):
    NAMED_INSTANCE = "NamedInstance"
    BIPARTITE = "Bipartite"
    REJECTION_CLASS_A = "RejectionClassA"
    WEAKLY_TRIANGULATED_PRISM_FREE = "WeaklyTriangulatedPrismFree"
    RANDOM_GNP = "RandomGnp"


class GenSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: GenFamily
    n: int = Field(default=0, ge=0)
    p: float = Field(default=0.5, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    name: Optional[str] = None
    max_tries: int = Field(default=100, ge=1)
