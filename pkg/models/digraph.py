from typing import Dict, FrozenSet, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

Arc = Tuple[int, int]


class Digraph(BaseModel):
    """A loopless directed graph on vertices 0..n-1 without parallel arcs."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    arcs: FrozenSet[Arc] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def check_arcs(self) -> "Digraph":
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) is out of range for {self.n} vertices")
        return self

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(sorted(self.arcs))
        return g


class EdgeWeighting(BaseModel):
    """A 0/1 weight on every arc of a digraph."""

    model_config = ConfigDict(frozen=True)

    digraph: Digraph
    weights: Dict[Arc, int]

    @model_validator(mode="after")
    def check_weights(self) -> "EdgeWeighting":
        if set(self.weights) != set(self.digraph.arcs):
            raise ValueError("a weighting must assign a weight to exactly the arcs of its digraph")
        if any(w not in (0, 1) for w in self.weights.values()):
            raise ValueError("weights must be 0 or 1")
        return self

    def weight_of(self, arcs) -> int:
        return sum(self.weights[a] for a in arcs)
