"""
Core graph types: bipartite graphs, vertex maps and matchings.

Vertices are ``(side, index)`` pairs with side ``"a"`` or ``"b"`` and a dense
0-based index per side. An edge is the pair ``(a_index, b_index)``.
"""
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

SIDE_A = "a"
SIDE_B = "b"

Vertex = Tuple[str, int]
Edge = Tuple[int, int]


def vertex_sort_key(v: Vertex) -> Tuple[int, int]:
    """Canonical vertex order: all A vertices before all B vertices, then by index."""
    return (0 if v[0] == SIDE_A else 1, v[1])


class VertexMap(BaseModel):
    """Maps vertices of a derived graph to vertices of the graph it was derived from.

    ``a[i]`` is the parent A index of the child's A vertex ``i``; likewise ``b``.
    """

    model_config = ConfigDict(frozen=True)

    a: Tuple[int, ...] = Field(default=(), description="Parent index of each child A vertex")
    b: Tuple[int, ...] = Field(default=(), description="Parent index of each child B vertex")

    @classmethod
    def identity(cls, n_a: int, n_b: int) -> "VertexMap":
        return cls(a=tuple(range(n_a)), b=tuple(range(n_b)))

    def to_parent(self, v: Vertex) -> Vertex:
        side, i = v
        return (side, self.a[i] if side == SIDE_A else self.b[i])

    def edge_to_parent(self, e: Edge) -> Edge:
        return (self.a[e[0]], self.b[e[1]])

    def then(self, outer: "VertexMap") -> "VertexMap":
        """Compose with the parent's own map, giving a map straight to the grandparent."""
        return VertexMap(
            a=tuple(outer.a[i] for i in self.a),
            b=tuple(outer.b[j] for j in self.b),
        )

    def inverse_a(self) -> Dict[int, int]:
        return {p: c for c, p in enumerate(self.a)}

    def inverse_b(self) -> Dict[int, int]:
        return {p: c for c, p in enumerate(self.b)}


class BipartiteGraph(BaseModel):
    """A simple bipartite graph with sides A = {0..n_a-1} and B = {0..n_b-1}."""

    model_config = ConfigDict(frozen=True)

    n_a: int = Field(..., ge=0, description="Number of A vertices")
    n_b: int = Field(..., ge=0, description="Number of B vertices")
    edges: FrozenSet[Edge] = Field(default_factory=frozenset, description="Edges as (a, b) index pairs")

    @model_validator(mode="after")
    def check_edge_bounds(self) -> "BipartiteGraph":
        for a, b in self.edges:
            if not (0 <= a < self.n_a and 0 <= b < self.n_b):
                raise ValueError(f"edge ({a}, {b}) is out of range for sides {self.n_a}x{self.n_b}")
        return self

    @classmethod
    def from_edges(cls, n_a: int, n_b: int, edges: Iterable[Edge]) -> "BipartiteGraph":
        return cls(n_a=n_a, n_b=n_b, edges=frozenset((int(a), int(b)) for a, b in edges))

    @property
    def vertex_count(self) -> int:
        return self.n_a + self.n_b

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_balanced(self) -> bool:
        return self.n_a == self.n_b

    def vertices(self) -> List[Vertex]:
        return [(SIDE_A, i) for i in range(self.n_a)] + [(SIDE_B, j) for j in range(self.n_b)]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self.edges

    def neighbors_of_a(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n_a)]
        for a, b in sorted(self.edges):
            adj[a].append(b)
        return adj

    def neighbors_of_b(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n_b)]
        for a, b in sorted(self.edges):
            adj[b].append(a)
        return adj

    def neighbors(self, v: Vertex) -> List[Vertex]:
        side, i = v
        if side == SIDE_A:
            return [(SIDE_B, b) for (a, b) in sorted(self.edges) if a == i]
        return [(SIDE_A, a) for (a, b) in sorted(self.edges) if b == i]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    # networkx bridge. Nodes are integers (A vertex i -> i, B vertex j -> n_a + j)
    # so that set iteration inside networkx stays deterministic.

    def node_id(self, v: Vertex) -> int:
        side, i = v
        return i if side == SIDE_A else self.n_a + i

    def vertex_at(self, node: int) -> Vertex:
        return (SIDE_A, node) if node < self.n_a else (SIDE_B, node - self.n_a)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for i in range(self.n_a):
            g.add_node(i, side=SIDE_A, bipartite=0)
        for j in range(self.n_b):
            g.add_node(self.n_a + j, side=SIDE_B, bipartite=1)
        g.add_edges_from((a, self.n_a + b) for a, b in sorted(self.edges))
        return g

    def cyclomatic_number(self) -> int:
        if self.vertex_count == 0:
            return 0
        components = nx.number_connected_components(self.to_networkx())
        return self.edge_count - self.vertex_count + components

    def induced_subgraph(self, vertices: Iterable[Vertex]) -> Tuple["BipartiteGraph", VertexMap]:
        """Return the subgraph induced by ``vertices`` and its map back to this graph."""
        keep = set(vertices)
        a_keep = sorted(i for s, i in keep if s == SIDE_A)
        b_keep = sorted(j for s, j in keep if s == SIDE_B)
        a_new = {old: new for new, old in enumerate(a_keep)}
        b_new = {old: new for new, old in enumerate(b_keep)}
        edges = [(a_new[a], b_new[b]) for a, b in self.edges if a in a_new and b in b_new]
        sub = BipartiteGraph.from_edges(len(a_keep), len(b_keep), edges)
        return sub, VertexMap(a=tuple(a_keep), b=tuple(b_keep))

    def without_vertices(self, vertices: Iterable[Vertex]) -> Tuple["BipartiteGraph", VertexMap]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in self.vertices() if v not in drop)

    def with_edges(self, extra: Iterable[Edge]) -> "BipartiteGraph":
        return BipartiteGraph(n_a=self.n_a, n_b=self.n_b, edges=self.edges | frozenset(extra))

    def without_edges(self, removed: Iterable[Edge]) -> "BipartiteGraph":
        return BipartiteGraph(n_a=self.n_a, n_b=self.n_b, edges=self.edges - frozenset(removed))


class Matching(BaseModel):
    """A set of pairwise disjoint edges."""

    model_config = ConfigDict(frozen=True)

    edges: FrozenSet[Edge] = Field(default_factory=frozenset)

    @model_validator(mode="after")
    def check_disjoint(self) -> "Matching":
        a_seen = {a for a, _ in self.edges}
        b_seen = {b for _, b in self.edges}
        if len(a_seen) != len(self.edges) or len(b_seen) != len(self.edges):
            raise ValueError("matching edges must be pairwise disjoint")
        return self

    @property
    def size(self) -> int:
        return len(self.edges)

    def partner_of_b(self) -> Dict[int, int]:
        return {b: a for a, b in self.edges}

    def is_matching_in(self, graph: BipartiteGraph) -> bool:
        return self.edges <= graph.edges

    def is_perfect_in(self, graph: BipartiteGraph) -> bool:
        return (
            self.is_matching_in(graph)
            and graph.is_balanced
            and self.size == graph.n_a
        )

    def restricted_to(self, vmap: VertexMap) -> "Matching":
        """The edges of this matching whose endpoints both survive in the mapped child."""
        inv_a, inv_b = vmap.inverse_a(), vmap.inverse_b()
        return Matching(
            edges=frozenset(
                (inv_a[a], inv_b[b]) for a, b in self.edges if a in inv_a and b in inv_b
            )
        )
