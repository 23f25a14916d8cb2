"""
Problems equivalent to Pfaffian orientation: Pólya matrices, even digraphs
and sign-nonsingular matrices.
"""
import logging
from typing import Optional

import networkx as nx

from config import settings
from models.bipartite_graph import SIDE_A, BipartiteGraph
from models.digraph import Digraph, EdgeWeighting
from models.matrix import SignMatrix, ZeroOneMatrix
from models.orientation import Direction, Orientation
from models.verdict import EvennessVerdict
from services.graph_service import connected_components, flip_vertices, graph_of_matrix
from services.matching_service import has_perfect_matching, is_strongly_k_connected, max_matching, prune_non_pm_edges
from services.oracle_service import all_circuits_odd, determinant, permanent
from services.orient_service import pfaffian_orientation
from utils.exceptions import VerificationError

logger = logging.getLogger(__name__)


def polya_matrix(matrix: ZeroOneMatrix, limit: Optional[int] = None) -> Optional[SignMatrix]:
    """Sign the entries of ``matrix`` so that det(B) = per(A).

    Args:
        matrix: Square 0/1 matrix A.
        limit: Largest order for which det(B) = per(A) is re-checked exactly.

    Returns:
        SignMatrix B with |B| = A, or None when no such signing exists.
    """
    graph = graph_of_matrix(matrix)
    verdict = pfaffian_orientation(graph)
    if not verdict.pfaffian:
        return None
    rows = verdict.orientation.signed_matrix()
    if rows and determinant(rows) < 0:
        rows[0] = [-x for x in rows[0]]
    oracle_limit = settings.oracle_limit if limit is None else limit
    if matrix.n <= oracle_limit:
        per = permanent(matrix.rows(), oracle_limit)
        det = determinant(rows)
        if per != det:
            raise VerificationError(f"signed matrix has det {det} but the permanent is {per}")
    else:
        logger.warning("matrix of order %d is above the oracle limit; det = per not re-checked", matrix.n)
    return SignMatrix.from_rows(rows)


def bipartite_of_digraph(digraph: Digraph) -> BipartiteGraph:
    """G(D): a_v and b_v per vertex, the matching edge (a_v, b_v) and an edge (a_u, b_v) per arc u -> v."""
    edges = [(v, v) for v in range(digraph.n)] + list(digraph.arcs)
    return BipartiteGraph.from_edges(digraph.n, digraph.n, edges)


def is_even_digraph(digraph: Digraph, check_limit: Optional[int] = None) -> EvennessVerdict:
    """Decide whether every 0/1 arc weighting leaves some circuit of even weight.

    D is even exactly when G(D) has no Pfaffian orientation. Otherwise the
    Pfaffian orientation, flipped so every matching edge points A to B, gives
    the witness: arc u -> v weighs 1 iff (a_u, b_v) points A to B.
    """
    n = digraph.n
    if n >= 2 and digraph.arc_count > 3 * n - 4 and is_strongly_k_connected(digraph, 2):
        logger.debug("strongly 2-connected digraph with %d > 3n-4 arcs is even", digraph.arc_count)
        return EvennessVerdict(even=True)

    verdict = pfaffian_orientation(bipartite_of_digraph(digraph))
    if not verdict.pfaffian:
        return EvennessVerdict(even=True)

    orientation = verdict.orientation
    backwards = [(SIDE_A, v) for v in range(n) if orientation.direction(v, v) is Direction.B_TO_A]
    normal = flip_vertices(orientation, backwards)
    if any(normal.direction(v, v) is not Direction.A_TO_B for v in range(n)):
        raise VerificationError("matching edges could not be normalised to point A to B")
    weights = {
        (u, v): 1 if normal.direction(u, v) is Direction.A_TO_B else 0 for u, v in digraph.arcs
    }
    witness = EdgeWeighting(digraph=digraph, weights=weights)

    limit = settings.evenness_witness_check_limit if check_limit is None else check_limit
    if n <= limit:
        if not all_circuits_odd(witness, limit):
            raise VerificationError("witness weighting leaves a circuit of even weight")
    else:
        logger.warning("digraph on %d vertices is above the witness check limit", n)
    return EvennessVerdict(even=False, witness=witness)


def _differ_by_flips(first: Orientation, second: Orientation, graph: BipartiteGraph) -> bool:
    """True when some vertex flip turns ``first`` into ``second`` on ``graph``'s edges."""
    relative = {e: first.sign(*e) * second.sign(*e) for e in graph.edges}
    for component, cmap in connected_components(graph):
        g = component.to_networkx()
        if g.number_of_nodes() == 0:
            continue
        root = min(g)
        potential = {root: 1}
        for u, v in nx.bfs_edges(g, root):
            a, b = (u, v) if u < component.n_a else (v, u)
            edge = cmap.edge_to_parent((a, b - component.n_a))
            potential[v] = potential[u] * relative[edge]
        for a, b in component.edges:
            if potential[a] * potential[component.n_a + b] != relative[cmap.edge_to_parent((a, b))]:
                return False
    return True


def sign_nonsingular(matrix: SignMatrix, limit: Optional[int] = None) -> bool:
    """Decide whether every real matrix with this sign pattern is nonsingular.

    Up to the oracle limit this is per(|M|) = |det(M)| > 0, computed exactly.
    Larger matrices are compared with a Pfaffian orientation of the support
    graph, restricted to edges that lie in some perfect matching.
    """
    support = matrix.support()
    oracle_limit = settings.oracle_limit if limit is None else limit
    if matrix.n <= oracle_limit:
        per = permanent(support.rows(), oracle_limit)
        return per > 0 and per == abs(determinant(matrix.rows()))

    graph = graph_of_matrix(support)
    if not has_perfect_matching(graph):
        return False
    verdict = pfaffian_orientation(graph)
    if not verdict.pfaffian:
        return False
    signing = Orientation(
        graph=graph,
        directions={(a, b): Direction.from_sign(matrix.entries[a][b]) for a, b in graph.edges},
    )
    kept = prune_non_pm_edges(graph, max_matching(graph)).kept
    return _differ_by_flips(signing, verdict.orientation, kept)
