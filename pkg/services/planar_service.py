"""
Planar braces and the Heawood graph: embedding, Kasteleyn-style face
orientation and Heawood recognition.
"""
import logging
from typing import Dict, Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher, categorical_node_match

from models.bipartite_graph import SIDE_A, BipartiteGraph, Edge, Vertex
from models.embedding import Embedding, HalfEdge
from models.orientation import Direction, Orientation
from services.graph_service import heawood_graph
from utils.exceptions import NotHeawoodError, NotPlanarError

logger = logging.getLogger(__name__)


def planar_embed(graph: BipartiteGraph) -> Optional[Embedding]:
    """Embed ``graph`` in the plane.

    Args:
        graph: Any bipartite graph; disconnected graphs are embedded per component.

    Returns:
        Embedding with rotations and face walks, or None when the graph is not planar.
    """
    g = graph.to_networkx()
    planar, emb = nx.check_planarity(g)
    if not planar:
        return None
    rotation = {}
    for node in sorted(g):
        order = list(emb.neighbors_cw_order(node)) if node in emb else []
        rotation[graph.vertex_at(node)] = tuple(graph.vertex_at(m) for m in order)
    visited = set()
    faces = []
    for node in sorted(g):
        if node not in emb:
            continue
        for nbr in emb.neighbors_cw_order(node):
            if (node, nbr) in visited:
                continue
            walk = emb.traverse_face(node, nbr, mark_half_edges=visited)
            faces.append(
                tuple(
                    (graph.vertex_at(walk[i]), graph.vertex_at(walk[(i + 1) % len(walk)]))
                    for i in range(len(walk))
                )
            )
    return Embedding(
        rotation=rotation,
        faces=tuple(faces),
        component_count=nx.number_connected_components(g) if g.number_of_nodes() else 0,
        edge_count=graph.edge_count,
    )


def _edge_of(half: HalfEdge) -> Edge:
    u, v = half
    return (u[1], v[1]) if u[0] == SIDE_A else (v[1], u[1])


def _agrees(half: HalfEdge, direction: Direction) -> bool:
    u, _ = half
    return (direction is Direction.A_TO_B) == (u[0] == SIDE_A)


def fkt_orientation(graph: BipartiteGraph, embedding: Embedding) -> Orientation:
    """Orient a plane graph so that every bounded face is oddly oriented.

    Spanning tree edges point A to B. The remaining edges form a tree in the
    dual; walking it from the leaves towards the outer face, each face fixes the
    one edge it shares with its parent so its boundary walk has an odd number
    of forward edges. Bridges are counted once per traversal.
    """
    g = graph.to_networkx()
    directions: Dict[Edge, Direction] = {}
    for comp in sorted(nx.connected_components(g), key=min):
        for u, v in nx.bfs_edges(g, source=min(comp)):
            directions[_edge_of((graph.vertex_at(u), graph.vertex_at(v)))] = Direction.A_TO_B
        faces = embedding.faces_of(graph.vertex_at(n) for n in comp)
        if not faces:
            continue
        face_of = {half: idx for idx, face in enumerate(faces) for half in face}
        dual = nx.Graph()
        dual.add_nodes_from(range(len(faces)))
        for face in faces:
            for half in face:
                edge = _edge_of(half)
                if edge not in directions:
                    dual.add_edge(face_of[half], face_of[(half[1], half[0])], edge=edge)
        outer = max(range(len(faces)), key=lambda i: (len(faces[i]), -i))
        parent = dict(nx.bfs_predecessors(dual, outer))
        order = [v for _, v in nx.bfs_edges(dual, outer)]
        for f in reversed(order):
            shared = dual.edges[f, parent[f]]["edge"]
            forward = 0
            shared_half = None
            for half in faces[f]:
                edge = _edge_of(half)
                if edge == shared:
                    shared_half = half
                elif _agrees(half, directions[edge]):
                    forward += 1
            along = Direction.A_TO_B if shared_half[0][0] == SIDE_A else Direction.B_TO_A
            directions[shared] = along if forward % 2 == 0 else along.reversed()
    return Orientation(graph=graph, directions=directions)


def planar_orientation(graph: BipartiteGraph) -> Orientation:
    embedding = planar_embed(graph)
    if embedding is None:
        raise NotPlanarError("graph is not planar")
    return fkt_orientation(graph, embedding)


def heawood_isomorphism(graph: BipartiteGraph) -> Optional[Dict[Vertex, Vertex]]:
    """Return a side-preserving isomorphism onto the Heawood graph, if one exists."""
    if graph.n_a != 7 or graph.n_b != 7 or graph.edge_count != 21:
        return None
    g = graph.to_networkx()
    if any(d != 3 for _, d in g.degree()):
        return None
    if not nx.is_connected(g) or nx.girth(g) != 6:
        return None
    reference = heawood_graph()
    matcher = GraphMatcher(g, reference.to_networkx(), node_match=categorical_node_match("side", None))
    mapping = next(matcher.isomorphisms_iter(), None)
    if mapping is None:
        return None
    return {graph.vertex_at(u): reference.vertex_at(v) for u, v in mapping.items()}


def is_heawood(graph: BipartiteGraph) -> bool:
    return heawood_isomorphism(graph) is not None


def heawood_orientation(graph: BipartiteGraph) -> Orientation:
    """All edges A to B; for the Heawood graph this is Pfaffian."""
    if not is_heawood(graph):
        raise NotHeawoodError("graph is not isomorphic to the Heawood graph")
    return Orientation.uniform(graph, Direction.A_TO_B)
