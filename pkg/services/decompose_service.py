"""
Structural decomposition: 2-sum splits along reducing matching edges, the
brace decomposition built from them, trisector enumeration and trisum splits.
"""
import logging
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from models.bipartite_graph import (
    SIDE_A,
    SIDE_B,
    BipartiteGraph,
    Edge,
    Matching,
    Vertex,
    VertexMap,
    vertex_sort_key,
)
from models.decomposition import (
    DecompositionTree,
    LeafKind,
    NodeKind,
    Piece,
    Trisector,
    TrisumSplit,
    TwoSumSplit,
)
from services.graph_service import connected_components, is_connected
from services.matching_service import (
    as_digraph,
    digraph_of,
    is_brace,
    is_k_extendable,
    max_matching,
    prune_non_pm_edges,
)
from utils.exceptions import (
    InvalidGraphError,
    NoPerfectMatchingError,
    NotABraceError,
    NotATrisectorError,
    NotExtendableError,
)

logger = logging.getLogger(__name__)


def split_along(graph: BipartiteGraph, edge: Edge, x: Iterable[int]) -> TwoSumSplit:
    """Express ``graph`` as a 2-sum along ``edge`` with first shore ``x``.

    Args:
        graph: The graph to split.
        edge: The matching edge (u1, u2) shared by both pieces.
        x: A vertices whose neighbourhood lies inside a balanced set Y1 plus u2.

    Returns:
        TwoSumSplit whose first piece keeps X, Y1, u1, u2 (with u1 joined to the
        Y1 vertices that saw the other side) and whose second piece keeps the rest
        (with u2 joined to the Y2 vertices that saw Y1).
    """
    u1, u2 = edge
    x = set(x)
    adj_a = graph.neighbors_of_a()
    adj_b = graph.neighbors_of_b()
    y1: Set[int] = set()
    for a in x:
        y1.update(adj_a[a])
    y1.discard(u2)
    if len(y1) != len(x):
        raise InvalidGraphError(f"shore of size {len(x)} has {len(y1)} neighbours besides u2")
    y2 = set(range(graph.n_a)) - x - {u1}
    z2 = set(range(graph.n_b)) - y1 - {u2}

    first, first_map = graph.induced_subgraph(
        [(SIDE_A, a) for a in x | {u1}] + [(SIDE_B, b) for b in y1 | {u2}]
    )
    inv_a, inv_b = first_map.inverse_a(), first_map.inverse_b()
    joined_1 = {
        (inv_a[u1], inv_b[y])
        for y in y1
        if u1 not in adj_b[y] and any(a in y2 for a in adj_b[y])
    }

    second, second_map = graph.induced_subgraph(
        [(SIDE_A, a) for a in y2 | {u1}] + [(SIDE_B, b) for b in z2 | {u2}]
    )
    inv_a, inv_b = second_map.inverse_a(), second_map.inverse_b()
    joined_2 = {
        (inv_a[y], inv_b[u2])
        for y in y2
        if u2 not in adj_a[y] and any(b in y1 for b in adj_a[y])
    }

    return TwoSumSplit(
        parent=graph,
        edge=edge,
        x=frozenset(x),
        y1=frozenset(y1),
        first=Piece(graph=first.with_edges(joined_1), vmap=first_map, added_edges=frozenset(joined_1)),
        second=Piece(graph=second.with_edges(joined_2), vmap=second_map, added_edges=frozenset(joined_2)),
    )


def reducing_edge_splits(graph: BipartiteGraph, matching: Matching, edge: Edge) -> List[TwoSumSplit]:
    """Split ``graph`` along the matching edge ``edge`` as far as it goes.

    The strong components of D(G - u1 - u2, M - e) are peeled off sink first;
    each one becomes the first shore of a 2-sum and the next split works on the
    remaining piece. An empty list means ``edge`` is not reducing.
    """
    if edge not in matching.edges:
        raise InvalidGraphError(f"edge {edge} is not in the perfect matching")
    if not is_k_extendable(graph, 1):
        raise NotExtendableError("2-sum splits need a 1-extendable graph")
    u1, u2 = edge
    rest, rest_map = graph.without_vertices([(SIDE_A, u1), (SIDE_B, u2)])
    if rest.vertex_count == 0:
        return []
    md = digraph_of(rest, matching.restricted_to(rest_map))
    condensed = nx.condensation(as_digraph(md).to_networkx())
    if condensed.number_of_nodes() == 1:
        return []
    order = list(nx.topological_sort(condensed))

    splits = []
    piece, piece_map = graph, VertexMap.identity(graph.n_a, graph.n_b)
    for comp in reversed(order[1:]):
        shore = {rest_map.a[i] for i in condensed.nodes[comp]["members"]}
        inv_a, inv_b = piece_map.inverse_a(), piece_map.inverse_b()
        split = split_along(piece, (inv_a[u1], inv_b[u2]), {inv_a[a] for a in shore})
        splits.append(split)
        piece, piece_map = split.second.graph, split.second.vmap.then(piece_map)
    logger.debug("edge %s splits the graph into %d 2-sums", edge, len(splits))
    return splits


def decompose_into_braces(
    graph: BipartiteGraph, matching: Matching, origin: Optional[VertexMap] = None
) -> DecompositionTree:
    """Decompose a connected 1-extendable graph into braces by repeated 2-sum splits.

    Args:
        graph: Connected 1-extendable bipartite graph.
        matching: A perfect matching of ``graph``; every piece inherits its edges.
        origin: Map from ``graph`` to the graph the caller started from.

    Returns:
        DecompositionTree of TWO_SUM nodes whose leaves are BRACE leaves.
    """
    if not is_connected(graph) or not is_k_extendable(graph, 1):
        raise NotExtendableError("brace decomposition needs a connected 1-extendable graph")
    if origin is None:
        origin = VertexMap.identity(graph.n_a, graph.n_b)
    return _decompose(graph, matching, origin)


def decompose_graph(graph: BipartiteGraph, matching: Optional[Matching] = None) -> DecompositionTree:
    """Decompose any graph with a perfect matching.

    Edges in no perfect matching are pruned, the rest falls apart into
    components and each component gets its 2-sum decomposition.

    Returns:
        A PRUNED root whose only child is a COMPONENTS node, one subtree per component.
    """
    if matching is None:
        matching = max_matching(graph)
    if not matching.is_perfect_in(graph):
        raise NoPerfectMatchingError("graph has no perfect matching")
    identity = VertexMap.identity(graph.n_a, graph.n_b)
    pruned = prune_non_pm_edges(graph, matching)
    subtrees = [
        decompose_into_braces(component, matching.restricted_to(cmap), cmap)
        for component, cmap in connected_components(pruned.kept)
    ]
    logger.debug("pruned %d edge(s), %d component(s)", len(pruned.removed), len(subtrees))
    components = DecompositionTree(kind=NodeKind.COMPONENTS, graph=pruned.kept, origin=identity, children=subtrees)
    return DecompositionTree(
        kind=NodeKind.PRUNED, graph=graph, origin=identity, removed_edges=pruned.removed, children=[components]
    )


def _decompose(graph: BipartiteGraph, matching: Matching, origin: VertexMap) -> DecompositionTree:
    for edge in sorted(matching.edges, key=lambda e: origin.a[e[0]]):
        splits = reducing_edge_splits(graph, matching, edge)
        if splits:
            return _chain(graph, matching, origin, splits, 0)
    if not is_brace(graph):
        raise NotABraceError("decomposition left a piece that is not a brace")
    return DecompositionTree(kind=NodeKind.LEAF, leaf=LeafKind.BRACE, graph=graph, origin=origin)


def _chain(
    graph: BipartiteGraph,
    matching: Matching,
    origin: VertexMap,
    splits: Sequence[TwoSumSplit],
    i: int,
) -> DecompositionTree:
    split = splits[i]
    first = _decompose(
        split.first.graph, matching.restricted_to(split.first.vmap), split.first.vmap.then(origin)
    )
    second_matching = matching.restricted_to(split.second.vmap)
    second_origin = split.second.vmap.then(origin)
    if i + 1 < len(splits):
        second = _chain(split.second.graph, second_matching, second_origin, splits, i + 1)
    else:
        second = _decompose(split.second.graph, second_matching, second_origin)
    return DecompositionTree(
        kind=NodeKind.TWO_SUM, graph=graph, origin=origin, two_sum=split, children=[first, second]
    )


def _components_without(graph: BipartiteGraph, removed: Iterable[Vertex]) -> List[List[Vertex]]:
    g = graph.to_networkx()
    drop = {graph.node_id(v) for v in removed}
    view = g.subgraph(n for n in g if n not in drop)
    comps = [
        sorted((graph.vertex_at(n) for n in comp), key=vertex_sort_key)
        for comp in nx.connected_components(view)
    ]
    comps.sort(key=lambda c: (len(c), vertex_sort_key(c[0])))
    return comps


def enumerate_trisectors(graph: BipartiteGraph) -> List[Trisector]:
    """All balanced 4-sets whose removal leaves at least three components.

    Returns:
        Trisectors in lexicographic order of (A pair, B pair).
    """
    if not is_brace(graph):
        raise NotABraceError("trisectors are only enumerated for braces")
    g = graph.to_networkx()
    found = []
    for a_pair in combinations(range(graph.n_a), 2):
        for b_pair in combinations(range(graph.n_b), 2):
            drop = {a_pair[0], a_pair[1], graph.n_a + b_pair[0], graph.n_a + b_pair[1]}
            view = g.subgraph(n for n in g if n not in drop)
            if nx.number_connected_components(view) >= 3:
                found.append(Trisector(a=a_pair, b=b_pair))
    return found


def trisum_split(graph: BipartiteGraph, trisector: Trisector) -> TrisumSplit:
    """Split ``graph`` into the three trisum pieces along ``trisector``.

    The two smallest components of G - X each get a piece; the third piece
    takes all remaining components. Every piece holds the full 4-circuit on X.
    """
    if max(trisector.a) >= graph.n_a or max(trisector.b) >= graph.n_b:
        raise NotATrisectorError("trisector vertices are out of range")
    comps = _components_without(graph, trisector.vertices)
    if len(comps) < 3:
        raise NotATrisectorError(f"removing {trisector.vertices} leaves only {len(comps)} components")
    groups = [comps[0], comps[1], [v for comp in comps[2:] for v in comp]]
    circuit_edges = trisector.circuit_edges()
    deleted = frozenset(e for e in circuit_edges if e not in graph.edges)
    closed = graph.with_edges(circuit_edges)
    pieces = []
    for group in groups:
        sub, vmap = closed.induced_subgraph(list(trisector.vertices) + group)
        inv_a, inv_b = vmap.inverse_a(), vmap.inverse_b()
        added = frozenset((inv_a[a], inv_b[b]) for a, b in deleted)
        pieces.append(Piece(graph=sub, vmap=vmap, added_edges=added))
    return TrisumSplit(
        parent=graph, trisector=trisector, pieces=tuple(pieces), deleted_circuit_edges=deleted
    )


def compose_trisum(
    pieces: Sequence[BipartiteGraph],
    circuits: Sequence[Tuple[int, int, int, int]],
    deleted: Iterable[Edge] = (),
) -> Tuple[BipartiteGraph, Trisector]:
    """Glue three graphs along a 4-circuit and optionally delete circuit edges.

    Args:
        pieces: Three bipartite graphs.
        circuits: For each piece, its circuit as (a1, b1, a2, b2) indices.
        deleted: Circuit edges to drop, in result coordinates (subset of {0,1}x{0,1}).

    Returns:
        The glued graph, whose circuit sits on A and B indices 0 and 1, and that circuit as a Trisector.
    """
    if len(pieces) != 3 or len(circuits) != 3:
        raise InvalidGraphError("a trisum glues exactly three pieces")
    edges = {(a, b) for a in (0, 1) for b in (0, 1)}
    n_a, n_b = 2, 2
    for piece, (a1, b1, a2, b2) in zip(pieces, circuits):
        if not all(piece.has_edge(a, b) for a in (a1, a2) for b in (b1, b2)):
            raise InvalidGraphError("every piece must contain its 4-circuit")
        a_index = {a1: 0, a2: 1}
        b_index = {b1: 0, b2: 1}
        for a in range(piece.n_a):
            if a not in a_index:
                a_index[a] = n_a
                n_a += 1
        for b in range(piece.n_b):
            if b not in b_index:
                b_index[b] = n_b
                n_b += 1
        edges.update((a_index[a], b_index[b]) for a, b in piece.edges)
    dropped = set(deleted)
    if not dropped <= {(a, b) for a in (0, 1) for b in (0, 1)}:
        raise InvalidGraphError("only circuit edges may be deleted from a trisum")
    glued = BipartiteGraph.from_edges(n_a, n_b, edges - dropped)
    return glued, Trisector(a=(0, 1), b=(0, 1))
