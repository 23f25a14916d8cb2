"""
Graph construction helpers: matrix and graph conversions, components,
vertex flips and the Heawood graph.
"""
import logging
from functools import lru_cache
from typing import Iterable, List, Tuple

import networkx as nx

from models.bipartite_graph import SIDE_A, SIDE_B, BipartiteGraph, Vertex, VertexMap, vertex_sort_key
from models.matrix import ZeroOneMatrix
from models.orientation import Orientation
from utils.exceptions import InvalidGraphError

logger = logging.getLogger(__name__)


def graph_of_matrix(matrix: ZeroOneMatrix) -> BipartiteGraph:
    """Build the bipartite graph whose biadjacency matrix is ``matrix``.

    Args:
        matrix: Square 0/1 matrix; rows become A vertices and columns B vertices.

    Returns:
        BipartiteGraph with an edge (i, j) for every entry equal to 1.
    """
    edges = [(i, j) for i, row in enumerate(matrix.entries) for j, x in enumerate(row) if x]
    return BipartiteGraph.from_edges(matrix.n, matrix.n, edges)


def matrix_of_graph(graph: BipartiteGraph) -> ZeroOneMatrix:
    if not graph.is_balanced:
        raise InvalidGraphError(f"graph is not balanced ({graph.n_a} A vs {graph.n_b} B vertices)")
    rows = [[0] * graph.n_b for _ in range(graph.n_a)]
    for a, b in graph.edges:
        rows[a][b] = 1
    return ZeroOneMatrix.from_rows(rows)


def connected_components(graph: BipartiteGraph) -> List[Tuple[BipartiteGraph, VertexMap]]:
    """Split ``graph`` into connected components ordered by their smallest vertex."""
    g = graph.to_networkx()
    groups = []
    for nodes in nx.connected_components(g):
        vertices = sorted((graph.vertex_at(n) for n in nodes), key=vertex_sort_key)
        groups.append(vertices)
    groups.sort(key=lambda vs: vertex_sort_key(vs[0]))
    return [graph.induced_subgraph(vs) for vs in groups]


def is_connected(graph: BipartiteGraph) -> bool:
    if graph.vertex_count == 0:
        return True
    return nx.is_connected(graph.to_networkx())


def flip_vertices(orientation: Orientation, vertices: Iterable[Vertex]) -> Orientation:
    """Reverse every edge with exactly one endpoint in ``vertices``.

    Flipping a vertex multiplies its row or column of the signed matrix by -1,
    so Pfaffian-ness is preserved.
    """
    flipped = set(vertices)
    directions = {}
    for (a, b), d in orientation.directions.items():
        crossing = ((SIDE_A, a) in flipped) != ((SIDE_B, b) in flipped)
        directions[(a, b)] = d.reversed() if crossing else d
    return Orientation(graph=orientation.graph, directions=directions)


def fano_lines() -> List[Tuple[int, int, int]]:
    """The seven lines of the Fano plane, as translates of the difference set {0, 1, 3} mod 7."""
    lines = [tuple(sorted((i % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
    pairs = {}
    for line in lines:
        for x in line:
            for y in line:
                if x < y:
                    pairs[(x, y)] = pairs.get((x, y), 0) + 1
    if len(pairs) != 21 or any(c != 1 for c in pairs.values()):
        raise RuntimeError("Fano lines must cover every pair of points exactly once")
    return lines


def fano_incidence_matrix() -> ZeroOneMatrix:
    rows = [[1 if p in line else 0 for p in range(7)] for line in fano_lines()]
    return ZeroOneMatrix.from_rows(rows)


@lru_cache(maxsize=1)
def heawood_graph() -> BipartiteGraph:
    """The Heawood graph: lines of the Fano plane on side A, points on side B."""
    return graph_of_matrix(fano_incidence_matrix())
