from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.bipartite_graph import SIDE_A, SIDE_B, BipartiteGraph, Edge, Vertex


class Direction(str, Enum):
    A_TO_B = "AtoB"
    B_TO_A = "BtoA"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.A_TO_B else -1

    @property
    def symbol(self) -> str:
        return ">" if self is Direction.A_TO_B else "<"

    def reversed(self) -> "Direction":
        return Direction.B_TO_A if self is Direction.A_TO_B else Direction.A_TO_B

    @classmethod
    def from_sign(cls, sign: int) -> "Direction":
        return cls.A_TO_B if sign > 0 else cls.B_TO_A


class Orientation(BaseModel):
    """A direction for every edge of a bipartite graph."""

    model_config = ConfigDict(frozen=True)

    graph: BipartiteGraph
    directions: Dict[Edge, Direction] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_domain(self) -> "Orientation":
        if set(self.directions) != set(self.graph.edges):
            raise ValueError("an orientation must direct exactly the edges of its graph")
        return self

    @classmethod
    def uniform(cls, graph: BipartiteGraph, direction: Direction = Direction.A_TO_B) -> "Orientation":
        return cls(graph=graph, directions={e: direction for e in graph.edges})

    def direction(self, a: int, b: int) -> Direction:
        return self.directions[(a, b)]

    def sign(self, a: int, b: int) -> int:
        return self.directions[(a, b)].sign

    def signed_matrix(self) -> List[List[int]]:
        """Rows indexed by A, columns by B; +1 for AtoB, -1 for BtoA, 0 for non-edges."""
        rows = [[0] * self.graph.n_b for _ in range(self.graph.n_a)]
        for (a, b), d in self.directions.items():
            rows[a][b] = d.sign
        return rows

    def tail_and_head(self, e: Edge) -> tuple:
        a, b = e
        if self.directions[e] is Direction.A_TO_B:
            return (SIDE_A, a), (SIDE_B, b)
        return (SIDE_B, b), (SIDE_A, a)

    def agrees_with_step(self, u: Vertex, v: Vertex) -> bool:
        """True when the edge between ``u`` and ``v`` is directed from ``u`` to ``v``."""
        if u[0] == SIDE_A:
            return self.directions[(u[1], v[1])] is Direction.A_TO_B
        return self.directions[(v[1], u[1])] is Direction.B_TO_A
