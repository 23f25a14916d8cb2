"""
Matching services: maximum matchings, pruning of edges that lie in no
perfect matching, the matching digraph D(G, M) and k-extendability.
"""
import logging
from itertools import combinations

import networkx as nx

from config import settings
from models.bipartite_graph import BipartiteGraph, Matching
from models.decomposition import MatchingDigraph, PruneResult
from models.digraph import Digraph
from services.graph_service import is_connected
from utils.exceptions import (
    DisconnectedGraphError,
    InvalidGraphError,
    NoPerfectMatchingError,
    NotPerfectMatchingError,
    SizeLimitExceeded,
)

logger = logging.getLogger(__name__)


def max_matching(graph: BipartiteGraph) -> Matching:
    """Compute a maximum matching with Hopcroft-Karp.

    Args:
        graph: Any bipartite graph.

    Returns:
        Matching of maximum cardinality. The result is deterministic for a given graph.
    """
    g = graph.to_networkx()
    mate = nx.bipartite.hopcroft_karp_matching(g, top_nodes=range(graph.n_a))
    edges = [(node, mate[node] - graph.n_a) for node in range(graph.n_a) if node in mate]
    return Matching(edges=frozenset(edges))


def has_perfect_matching(graph: BipartiteGraph) -> bool:
    return graph.is_balanced and max_matching(graph).size == graph.n_a


def perfect_matching(graph: BipartiteGraph) -> Matching:
    matching = max_matching(graph)
    if not matching.is_perfect_in(graph):
        raise NoPerfectMatchingError("graph has no perfect matching")
    return matching


def digraph_of(graph: BipartiteGraph, matching: Matching) -> MatchingDigraph:
    """Build D(G, M) for a perfect matching ``matching`` of ``graph``.

    Digraph vertex u is the matching edge covering A vertex u. The non-matching
    edge (a_u, b) with b matched to a_v becomes the arc u -> v.
    """
    if not matching.is_perfect_in(graph):
        raise NotPerfectMatchingError("matching is not a perfect matching of the graph")
    partner_b = matching.partner_of_b()
    arc_edges = {}
    for a, b in graph.sorted_edges():
        if (a, b) in matching.edges:
            continue
        arc_edges[(a, partner_b[b])] = (a, b)
    return MatchingDigraph(
        n=graph.n_a,
        matching_edges=tuple(sorted(matching.edges)),
        arc_edges=arc_edges,
    )


def as_digraph(md: MatchingDigraph) -> Digraph:
    return Digraph(n=md.n, arcs=frozenset(md.arc_edges))


def prune_non_pm_edges(graph: BipartiteGraph, matching: Matching) -> PruneResult:
    """Drop the edges that lie in no perfect matching.

    A non-matching edge lies in some perfect matching exactly when its arc in
    D(G, M) lies on a directed circuit, i.e. both ends share a strong component.
    """
    md = digraph_of(graph, matching)
    component_of = {}
    for idx, comp in enumerate(nx.strongly_connected_components(as_digraph(md).to_networkx())):
        for node in comp:
            component_of[node] = idx
    removed = frozenset(
        edge for (u, v), edge in md.arc_edges.items() if component_of[u] != component_of[v]
    )
    if removed:
        logger.debug("pruned %d edges that lie in no perfect matching", len(removed))
    return PruneResult(kept=graph.without_edges(removed), removed=removed, witness_pm=matching)


def is_strongly_k_connected(digraph: Digraph, k: int) -> bool:
    """Strong connectivity (k=1) or strong connectivity after deleting any one vertex (k=2)."""
    if k not in (1, 2):
        raise InvalidGraphError(f"only k = 1 or k = 2 is supported, got {k}")
    g = digraph.to_networkx()

    def strong(h) -> bool:
        return h.number_of_nodes() == 0 or nx.is_strongly_connected(h)

    if not strong(g):
        return False
    if k == 1:
        return True
    return all(strong(g.subgraph([u for u in g if u != v])) for v in g)


def is_k_extendable(graph: BipartiteGraph, k: int) -> bool:
    """Decide 1- or 2-extendability of a connected graph with a perfect matching.

    Uses the matching digraph: G is k-extendable iff D(G, M) is strongly
    k-connected for a perfect matching M.
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("k-extendability is defined for connected graphs")
    md = digraph_of(graph, perfect_matching(graph))
    return is_strongly_k_connected(as_digraph(md), k)


def is_brace(graph: BipartiteGraph) -> bool:
    """A connected graph with a perfect matching that is 2-extendable."""
    if graph.vertex_count == 0 or not is_connected(graph) or not has_perfect_matching(graph):
        return False
    if graph.n_a <= 1:
        return True
    return is_k_extendable(graph, 2)


def is_k_extendable_by_hall(graph: BipartiteGraph, k: int) -> bool:
    """Check k-extendability through neighbourhood sizes.

    A connected balanced graph is k-extendable iff every nonempty set X of A
    vertices with |X| <= n_a - k has |N(X)| >= |X| + k. Exponential in n_a.
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("k-extendability is defined for connected graphs")
    if not has_perfect_matching(graph):
        raise NoPerfectMatchingError("graph has no perfect matching")
    if graph.n_a > settings.enumeration_limit:
        raise SizeLimitExceeded("Hall subset scan", graph.n_a, settings.enumeration_limit)
    adj = graph.neighbors_of_a()
    for size in range(1, graph.n_a - k + 1):
        for xs in combinations(range(graph.n_a), size):
            nbrs = set()
            for a in xs:
                nbrs.update(adj[a])
            if len(nbrs) < size + k:
                return False
    return True


