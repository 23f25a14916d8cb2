"""
Results of the structural decompositions: pruning, 2-sum splits, trisum splits
and the tree that records how a graph was broken into braces.
"""
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.bipartite_graph import SIDE_A, SIDE_B, BipartiteGraph, Edge, Matching, Vertex, VertexMap


class PruneResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    kept: BipartiteGraph = Field(..., description="Graph with only edges that lie in some perfect matching")
    removed: FrozenSet[Edge] = Field(default_factory=frozenset)
    witness_pm: Matching


class MatchingDigraph(BaseModel):
    """D(G, M): vertex i stands for the matching edge covering A vertex i.

    An edge (a_u, b) outside M with b matched to a_v becomes the arc u -> v.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    matching_edges: Tuple[Edge, ...]
    arc_edges: dict = Field(default_factory=dict, description="Arc (u, v) -> the graph edge it came from")

    def arcs(self) -> List[Tuple[int, int]]:
        return sorted(self.arc_edges)


class Piece(BaseModel):
    """One side of a split, with its map back into the split graph."""

    model_config = ConfigDict(frozen=True)

    graph: BipartiteGraph
    vmap: VertexMap
    added_edges: FrozenSet[Edge] = Field(default_factory=frozenset, description="Edges absent from the parent, in piece coordinates")


class TwoSumSplit(BaseModel):
    """The 2-sum split of ``parent`` along the reducing matching edge ``edge``.

    ``x`` is the out-closed set of A vertices that forms the first shore and
    ``y1`` its B neighbours other than ``edge[1]``.
    """

    model_config = ConfigDict(frozen=True)

    parent: BipartiteGraph
    edge: Edge
    x: FrozenSet[int]
    y1: FrozenSet[int]
    first: Piece
    second: Piece

    @model_validator(mode="after")
    def check_shores(self) -> "TwoSumSplit":
        u1, u2 = self.edge
        if len(self.x) != len(self.y1) or not self.x:
            raise ValueError("2-sum shores must be nonempty and balanced")
        if u1 in self.x or u2 in self.y1:
            raise ValueError("the reducing edge cannot lie inside a shore")
        for piece in (self.first, self.second):
            if piece.graph.vertex_count >= self.parent.vertex_count:
                raise ValueError("each 2-sum piece must be smaller than the parent")
        return self


class Trisector(BaseModel):
    """A balanced 4-set of vertices whose removal leaves at least three components."""

    model_config = ConfigDict(frozen=True)

    a: Tuple[int, int]
    b: Tuple[int, int]

    @model_validator(mode="after")
    def check_sorted(self) -> "Trisector":
        if not (self.a[0] < self.a[1] and self.b[0] < self.b[1]):
            raise ValueError("trisector indices must be distinct and sorted")
        return self

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return ((SIDE_A, self.a[0]), (SIDE_A, self.a[1]), (SIDE_B, self.b[0]), (SIDE_B, self.b[1]))

    def circuit(self) -> Tuple[Vertex, Vertex, Vertex, Vertex]:
        """The 4-circuit through all four A-B pairs, starting at the lowest A vertex."""
        return (
            (SIDE_A, self.a[0]),
            (SIDE_B, self.b[0]),
            (SIDE_A, self.a[1]),
            (SIDE_B, self.b[1]),
        )

    def circuit_edges(self) -> List[Edge]:
        return sorted((a, b) for a in self.a for b in self.b)


class TrisumSplit(BaseModel):
    """Pieces G1, G2, G3 of a trisum along ``trisector``.

    Each piece contains the full 4-circuit; ``deleted_circuit_edges`` lists the
    circuit edges the parent lacks.
    """

    model_config = ConfigDict(frozen=True)

    parent: BipartiteGraph
    trisector: Trisector
    pieces: Tuple[Piece, Piece, Piece]
    deleted_circuit_edges: FrozenSet[Edge] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def check_overlap(self) -> "TrisumSplit":
        shared = set(self.trisector.vertices)
        owned = []
        for piece in self.pieces:
            vs = {piece.vmap.to_parent(v) for v in piece.graph.vertices()}
            if not shared <= vs:
                raise ValueError("every trisum piece must contain the trisector")
            owned.append(vs - shared)
        for i in range(3):
            for j in range(i + 1, 3):
                if owned[i] & owned[j]:
                    raise ValueError("trisum pieces may only share the trisector")
        return self


class NodeKind(str, Enum):
    PRUNED = "pruned"
    COMPONENTS = "components"
    TWO_SUM = "two_sum"
    TRISUM = "trisum"
    LEAF = "leaf"


class LeafKind(str, Enum):
    BRACE = "brace"
    PLANAR = "planar"
    HEAWOOD = "heawood"
    NO_PERFECT_MATCHING = "no_perfect_matching"
    REJECTED = "rejected"


class DecompositionTree(BaseModel):
    """A node of the decomposition.

    ``origin`` maps the node's graph back to the graph the pipeline started
    from. Only the split matching ``kind`` is set.
    """

    model_config = ConfigDict(frozen=True)

    kind: NodeKind
    graph: BipartiteGraph
    origin: VertexMap
    leaf: Optional[LeafKind] = None
    removed_edges: FrozenSet[Edge] = Field(default_factory=frozenset)
    two_sum: Optional[TwoSumSplit] = None
    trisum: Optional[TrisumSplit] = None
    children: List["DecompositionTree"] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_kind(self) -> "DecompositionTree":
        if (self.kind is NodeKind.LEAF) != (self.leaf is not None):
            raise ValueError("exactly the leaf nodes carry a leaf kind")
        if self.kind is NodeKind.TWO_SUM and (self.two_sum is None or len(self.children) != 2):
            raise ValueError("a 2-sum node needs its split and two children")
        if self.kind is NodeKind.TRISUM and self.trisum is None:
            raise ValueError("a trisum node needs its split")
        if self.kind is NodeKind.LEAF and self.children:
            raise ValueError("leaves have no children")
        return self

    def node_at(self, path: List[int]) -> "DecompositionTree":
        node = self
        for i in path:
            node = node.children[i]
        return node

    def leaves(self) -> List["DecompositionTree"]:
        if self.kind is NodeKind.LEAF:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]


DecompositionTree.model_rebuild()
