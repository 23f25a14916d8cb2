"""
Exact reference computations used to check every claimed result.

Everything here is exponential in the input size and refuses inputs above the
configured limits with SizeLimitExceeded. All arithmetic is on Python ints.
"""
import logging
from itertools import combinations, permutations, product
from math import prod
from typing import Iterator, List, Optional, Sequence

import networkx as nx

from config import settings
from models.bipartite_graph import SIDE_A, SIDE_B, BipartiteGraph, Matching, Vertex
from models.digraph import Digraph, EdgeWeighting
from models.orientation import Direction, Orientation
from models.verdict import EvennessVerdict
from services.graph_service import is_connected
from services.matching_service import has_perfect_matching
from utils.exceptions import DisconnectedGraphError, SizeLimitExceeded

logger = logging.getLogger(__name__)


def _check_limit(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise SizeLimitExceeded(what, size, limit)


def permanent(rows: Sequence[Sequence[int]], limit: Optional[int] = None) -> int:
    """Permanent by Ryser's formula, visiting column subsets in Gray-code order.

    Args:
        rows: Square integer matrix.
        limit: Largest accepted order; defaults to ``settings.oracle_limit``.

    Returns:
        The exact permanent.
    """
    n = len(rows)
    _check_limit("permanent", n, settings.oracle_limit if limit is None else limit)
    if n == 0:
        return 1
    row_sums = [0] * n
    chosen = [False] * n
    size = 0
    total = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        step = -1 if chosen[j] else 1
        chosen[j] = not chosen[j]
        size += step
        for i in range(n):
            row_sums[i] += step * rows[i][j]
        term = prod(row_sums)
        total += -term if (n - size) % 2 else term
    return total


def permanent_by_permutations(rows: Sequence[Sequence[int]]) -> int:
    """Permanent straight from the definition. Only for tiny matrices."""
    n = len(rows)
    _check_limit("permanent expansion", n, 8)
    return sum(prod(rows[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def support_matrix(graph: BipartiteGraph) -> List[List[int]]:
    rows = [[0] * graph.n_b for _ in range(graph.n_a)]
    for a, b in graph.edges:
        rows[a][b] = 1
    return rows


def is_pfaffian_orientation(graph: BipartiteGraph, orientation: Orientation, limit: Optional[int] = None) -> bool:
    """True iff all perfect matchings get the same sign, i.e. per = |det|.

    Unbalanced graphs have no perfect matchings, so every orientation passes.
    """
    if not graph.is_balanced:
        return True
    per = permanent(support_matrix(graph), limit)
    return per == abs(determinant(orientation.signed_matrix()))


def iter_perfect_matchings(graph: BipartiteGraph, limit: Optional[int] = None) -> Iterator[Matching]:
    """Yield every perfect matching, A vertices matched in increasing order."""
    _check_limit("matching enumeration", graph.n_a, settings.enumeration_limit if limit is None else limit)
    if not graph.is_balanced:
        return
    adj = graph.neighbors_of_a()
    used = [False] * graph.n_b
    chosen: List[int] = []

    def extend(a: int):
        if a == graph.n_a:
            yield Matching(edges=frozenset(enumerate(chosen)))
            return
        for b in adj[a]:
            if not used[b]:
                used[b] = True
                chosen.append(b)
                yield from extend(a + 1)
                chosen.pop()
                used[b] = False

    yield from extend(0)


def enumerate_perfect_matchings(graph: BipartiteGraph, limit: Optional[int] = None) -> List[Matching]:
    return list(iter_perfect_matchings(graph, limit))


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def matching_sign(orientation: Orientation, matching: Matching) -> int:
    """Sign of the determinant term of ``matching`` in the signed matrix."""
    perm = [b for _, b in sorted(matching.edges)]
    return permutation_sign(perm) * prod(orientation.sign(a, b) for a, b in matching.edges)


def all_matching_signs_equal(graph: BipartiteGraph, orientation: Orientation, limit: Optional[int] = None) -> bool:
    signs = {matching_sign(orientation, m) for m in iter_perfect_matchings(graph, limit)}
    return len(signs) <= 1


def enumerate_circuits(graph: BipartiteGraph, limit: Optional[int] = None) -> List[List[Vertex]]:
    """All circuits of ``graph`` as vertex sequences."""
    _check_limit("circuit enumeration", graph.n_a, settings.enumeration_limit if limit is None else limit)
    g = graph.to_networkx()
    return [[graph.vertex_at(n) for n in cycle] for cycle in nx.simple_cycles(g)]


def is_central(graph: BipartiteGraph, vertices: Sequence[Vertex]) -> bool:
    """True when deleting ``vertices`` leaves a graph with a perfect matching."""
    rest, _ = graph.without_vertices(vertices)
    return has_perfect_matching(rest)


def is_oddly_oriented(orientation: Orientation, cycle: Sequence[Vertex]) -> bool:
    forward = sum(
        1 for i, u in enumerate(cycle) if orientation.agrees_with_step(u, cycle[(i + 1) % len(cycle)])
    )
    return forward % 2 == 1


def is_pfaffian_by_definition(graph: BipartiteGraph, orientation: Orientation, limit: Optional[int] = None) -> bool:
    """Every central circuit is oddly oriented."""
    return all(
        is_oddly_oriented(orientation, cycle)
        for cycle in enumerate_circuits(graph, limit)
        if is_central(graph, cycle)
    )


def find_pfaffian_bruteforce(graph: BipartiteGraph, limit: Optional[int] = None) -> Optional[Orientation]:
    """Search all orientations up to vertex flips for a Pfaffian one.

    Spanning forest edges are fixed AtoB, which loses nothing since flips can
    realise any orientation of a forest. The search is 2^(cyclomatic number).
    """
    brute_limit = settings.brute_limit if limit is None else limit
    _check_limit("brute-force search (cyclomatic number)", graph.cyclomatic_number(), brute_limit)
    if not graph.is_balanced or not has_perfect_matching(graph):
        return Orientation.uniform(graph)
    g = graph.to_networkx()
    forest = set()
    for comp in nx.connected_components(g):
        for u, v in nx.bfs_edges(g, source=min(comp)):
            a, b = (u, v) if u < graph.n_a else (v, u)
            forest.add((a, b - graph.n_a))
    free = [e for e in graph.sorted_edges() if e not in forest]
    per = permanent(support_matrix(graph))
    base = {e: Direction.A_TO_B for e in forest}
    for choice in product((Direction.A_TO_B, Direction.B_TO_A), repeat=len(free)):
        directions = dict(base)
        directions.update(zip(free, choice))
        candidate = Orientation(graph=graph, directions=directions)
        if abs(determinant(candidate.signed_matrix())) == per:
            return candidate
    return None


def pfaffian_exists_bruteforce(graph: BipartiteGraph, limit: Optional[int] = None) -> bool:
    return find_pfaffian_bruteforce(graph, limit) is not None


def is_k_extendable_by_definition(graph: BipartiteGraph, k: int) -> bool:
    """Every matching of size k extends to a perfect matching."""
    if not is_connected(graph):
        raise DisconnectedGraphError("k-extendability is defined for connected graphs")
    if not has_perfect_matching(graph):
        return False
    for edges in combinations(graph.sorted_edges(), k):
        if len({a for a, _ in edges}) < k or len({b for _, b in edges}) < k:
            continue
        covered = [(SIDE_A, a) for a, _ in edges] + [(SIDE_B, b) for _, b in edges]
        if not is_central(graph, covered):
            return False
    return True


def has_k23_subgraph(graph: BipartiteGraph) -> bool:
    """Two vertices on one side with three common neighbours span a K_{2,3}."""
    for adj in (graph.neighbors_of_a(), graph.neighbors_of_b()):
        sets = [set(x) for x in adj]
        for i, j in combinations(range(len(sets)), 2):
            if len(sets[i] & sets[j]) >= 3:
                return True
    return False


def directed_circuits(digraph: Digraph, limit: Optional[int] = None) -> List[List[int]]:
    _check_limit("circuit enumeration", digraph.n, settings.enumeration_limit if limit is None else limit)
    return list(nx.simple_cycles(digraph.to_networkx()))


def circuit_arcs(cycle: Sequence[int]):
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def has_even_directed_circuit(digraph: Digraph, limit: Optional[int] = None) -> bool:
    return any(len(c) % 2 == 0 for c in directed_circuits(digraph, limit))


def all_circuits_odd(weighting: EdgeWeighting, limit: Optional[int] = None) -> bool:
    return all(
        weighting.weight_of(circuit_arcs(c)) % 2 == 1
        for c in directed_circuits(weighting.digraph, limit)
    )


def is_even_by_circuits(digraph: Digraph, limit: Optional[int] = None) -> EvennessVerdict:
    """Decide evenness by solving "every circuit has odd weight" over GF(2).

    The digraph is even exactly when that linear system has no solution; a
    solution is returned as the witness weighting.
    """
    arcs = digraph.sorted_arcs()
    index = {arc: i for i, arc in enumerate(arcs)}
    basis = {}
    for cycle in directed_circuits(digraph, limit):
        mask = 0
        for arc in circuit_arcs(cycle):
            mask |= 1 << index[arc]
        rhs = 1
        while mask:
            lead = mask.bit_length() - 1
            if lead not in basis:
                basis[lead] = (mask, rhs)
                break
            other_mask, other_rhs = basis[lead]
            mask ^= other_mask
            rhs ^= other_rhs
        else:
            if rhs:
                return EvennessVerdict(even=True)
    solution = 0
    for lead in sorted(basis):
        mask, rhs = basis[lead]
        rest = mask & ~(1 << lead) & solution
        if rhs ^ (bin(rest).count("1") % 2):
            solution |= 1 << lead
    weights = {arc: (solution >> i) & 1 for arc, i in index.items()}
    return EvennessVerdict(even=False, witness=EdgeWeighting(digraph=digraph, weights=weights))


def verify_orientation(graph: BipartiteGraph, orientation: Orientation, limit: Optional[int] = None) -> Optional[bool]:
    """Like is_pfaffian_orientation, but None when the graph is too large to check."""
    oracle_limit = settings.oracle_limit if limit is None else limit
    if graph.is_balanced and graph.n_a > oracle_limit:
        logger.warning("matrix order %d is above the oracle limit %d; not verified", graph.n_a, oracle_limit)
        return None
    return is_pfaffian_orientation(graph, orientation, oracle_limit)
