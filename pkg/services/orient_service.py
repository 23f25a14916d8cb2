"""
The Pfaffian orientation pipeline.

Braces are settled by trisum splits, the planar face rule or Heawood
recognition; the brace orientations are spliced back through 2-sums,
components and pruned edges.
"""
import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from config import settings
from models.bipartite_graph import SIDE_A, BipartiteGraph, Edge, Vertex, VertexMap
from models.decomposition import DecompositionTree, LeafKind, NodeKind, Trisector, TrisumSplit, TwoSumSplit
from models.orientation import Direction, Orientation
from models.verdict import NoPfaffianKind, NoPfaffianReason, PfaffianVerdict
from services.decompose_service import decompose_graph, enumerate_trisectors, trisum_split
from services.graph_service import flip_vertices
from services.matching_service import has_perfect_matching, is_brace, max_matching
from services.oracle_service import determinant, permanent, support_matrix
from services.planar_service import fkt_orientation, is_heawood, planar_embed
from utils.exceptions import AlignmentError, NotABraceError, SpliceError

logger = logging.getLogger(__name__)

# Reason paths from pfaffian_orientation start with the PRUNED step and the component index.
COMPONENT_DEPTH = 2


def _self_check(graph: BipartiteGraph, orientation: Orientation, what: str) -> None:
    """Re-verify a spliced orientation while the exact check stays cheap."""
    if not graph.is_balanced or graph.n_a > settings.splice_check_order:
        return
    per = permanent(support_matrix(graph))
    if per > settings.splice_check_limit:
        return
    det = determinant(orientation.signed_matrix())
    if per != abs(det):
        raise SpliceError(f"{what} produced a non-Pfaffian orientation (per={per}, det={det})")


def splice_two_sum(split: TwoSumSplit, first: Orientation, second: Orientation) -> Orientation:
    """Combine Pfaffian orientations of the two 2-sum pieces into one of the parent.

    Edges inside the (X, Y1) shore keep their direction from the first piece,
    edges inside the other shore from the second. An edge crossing the cut
    between an A vertex p of the second shore and a B vertex q of the first
    gets the product of the signs of u1-q in the first piece and p-u2 in the
    second.
    """
    u1, u2 = split.edge
    inv1_a, inv1_b = split.first.vmap.inverse_a(), split.first.vmap.inverse_b()
    inv2_a, inv2_b = split.second.vmap.inverse_a(), split.second.vmap.inverse_b()
    directions: Dict[Edge, Direction] = {}
    for p, q in split.parent.edges:
        if p in split.x:
            directions[(p, q)] = first.direction(inv1_a[p], inv1_b[q])
        elif q not in split.y1 and q != u2:
            directions[(p, q)] = second.direction(inv2_a[p], inv2_b[q])
        else:
            sign = first.sign(inv1_a[u1], inv1_b[q]) * second.sign(inv2_a[p], inv2_b[u2])
            directions[(p, q)] = Direction.from_sign(sign)
    spliced = Orientation(graph=split.parent, directions=directions)
    _self_check(split.parent, spliced, "2-sum splice")
    return spliced


def align_on_circuit(
    fixed: Dict[Edge, Direction], moving: Orientation, circuit: Sequence[Vertex]
) -> Orientation:
    """Flip vertices of ``circuit`` until ``moving`` agrees with ``fixed`` on its edges.

    Args:
        fixed: Target directions of the circuit edges, in ``moving``'s coordinates.
        moving: Orientation to adjust.
        circuit: The four circuit vertices.

    Returns:
        flip_vertices(moving, S) for the first subset S (smallest first) that agrees.
    """
    for size in range(len(circuit) + 1):
        for subset in combinations(circuit, size):
            candidate = flip_vertices(moving, subset) if subset else moving
            if all(candidate.direction(*e) is d for e, d in fixed.items()):
                return candidate
    raise AlignmentError("orientations disagree in parity on the shared circuit")


def splice_trisum(split: TrisumSplit, orientations: Sequence[Orientation]) -> Orientation:
    """Align the piece orientations on the shared circuit and take their union on G."""
    reference = split.pieces[0]
    ref_inv_a, ref_inv_b = reference.vmap.inverse_a(), reference.vmap.inverse_b()
    circuit_dirs = {
        e: orientations[0].direction(ref_inv_a[e[0]], ref_inv_b[e[1]])
        for e in split.trisector.circuit_edges()
    }
    directions: Dict[Edge, Direction] = {}
    for piece, orientation in zip(split.pieces, orientations):
        inv_a, inv_b = piece.vmap.inverse_a(), piece.vmap.inverse_b()
        target = {(inv_a[a], inv_b[b]): d for (a, b), d in circuit_dirs.items()}
        circuit = [(side, inv_a[i] if side == SIDE_A else inv_b[i]) for side, i in split.trisector.circuit()]
        aligned = align_on_circuit(target, orientation, circuit)
        for (a, b), d in aligned.directions.items():
            directions[piece.vmap.edge_to_parent((a, b))] = d
    for e in split.deleted_circuit_edges:
        directions.pop(e, None)
    spliced = Orientation(graph=split.parent, directions=directions)
    _self_check(split.parent, spliced, "trisum splice")
    return spliced


def _leaf(graph: BipartiteGraph, origin: VertexMap, kind: LeafKind) -> DecompositionTree:
    return DecompositionTree(kind=NodeKind.LEAF, leaf=kind, graph=graph, origin=origin)


def _no(graph: BipartiteGraph, origin: VertexMap, kind: NoPfaffianKind) -> PfaffianVerdict:
    return PfaffianVerdict(
        pfaffian=False,
        tree=_leaf(graph, origin, LeafKind.REJECTED),
        reason=NoPfaffianReason(kind=kind),
    )


def brace_pfaffian(
    graph: BipartiteGraph, trisectors: List[Trisector], origin: Optional[VertexMap] = None
) -> PfaffianVerdict:
    """Decide a brace from its trisector list.

    Args:
        graph: A connected brace.
        trisectors: enumerate_trisectors(graph).
        origin: Map from ``graph`` to the pipeline input, recorded in the tree.

    Returns:
        PfaffianVerdict whose tree holds the trisum splits and the planar or
        Heawood leaves.
    """
    if origin is None:
        origin = VertexMap.identity(graph.n_a, graph.n_b)
    n = graph.vertex_count
    if n >= 5 and len(trisectors) > n - 5:
        return _no(graph, origin, NoPfaffianKind.TOO_MANY_TRISECTORS)

    if not trisectors:
        embedding = planar_embed(graph)
        if embedding is not None:
            return PfaffianVerdict(
                pfaffian=True,
                orientation=fkt_orientation(graph, embedding),
                tree=_leaf(graph, origin, LeafKind.PLANAR),
            )
        if is_heawood(graph):
            return PfaffianVerdict(
                pfaffian=True,
                orientation=Orientation.uniform(graph, Direction.A_TO_B),
                tree=_leaf(graph, origin, LeafKind.HEAWOOD),
            )
        return _no(graph, origin, NoPfaffianKind.NONPLANAR_NON_HEAWOOD)

    chosen = min(trisectors, key=lambda t: (t.a, t.b))
    split = trisum_split(graph, chosen)
    children = []
    orientations = []
    for i, piece in enumerate(split.pieces):
        verdict = brace_pfaffian(piece.graph, enumerate_trisectors(piece.graph), piece.vmap.then(origin))
        children.append(verdict.tree)
        if not verdict.pfaffian:
            tree = DecompositionTree(
                kind=NodeKind.TRISUM, graph=graph, origin=origin, trisum=split, children=children
            )
            return PfaffianVerdict(pfaffian=False, tree=tree, reason=verdict.reason.under(i))
        orientations.append(verdict.orientation)
    tree = DecompositionTree(kind=NodeKind.TRISUM, graph=graph, origin=origin, trisum=split, children=children)
    return PfaffianVerdict(pfaffian=True, tree=tree, orientation=splice_trisum(split, orientations))


def brace_entry(graph: BipartiteGraph, origin: Optional[VertexMap] = None) -> PfaffianVerdict:
    """Reject braces with more than 2n - 4 edges, then run brace_pfaffian."""
    if not is_brace(graph):
        raise NotABraceError("brace_entry needs a connected brace")
    if origin is None:
        origin = VertexMap.identity(graph.n_a, graph.n_b)
    n = graph.vertex_count
    if n >= 3 and graph.edge_count > 2 * n - 4:
        return _no(graph, origin, NoPfaffianKind.EDGE_BOUND_EXCEEDED)
    return brace_pfaffian(graph, enumerate_trisectors(graph), origin)


def _orient_tree(node: DecompositionTree) -> PfaffianVerdict:
    if node.kind is NodeKind.LEAF:
        return brace_entry(node.graph, node.origin)
    first = _orient_tree(node.children[0])
    if not first.pfaffian:
        tree = node.model_copy(update={"children": [first.tree, node.children[1]]})
        return PfaffianVerdict(pfaffian=False, tree=tree, reason=first.reason.under(0))
    second = _orient_tree(node.children[1])
    tree = node.model_copy(update={"children": [first.tree, second.tree]})
    if not second.pfaffian:
        return PfaffianVerdict(pfaffian=False, tree=tree, reason=second.reason.under(1))
    orientation = splice_two_sum(node.two_sum, first.orientation, second.orientation)
    return PfaffianVerdict(pfaffian=True, tree=tree, orientation=orientation)


def pfaffian_orientation(graph: BipartiteGraph) -> PfaffianVerdict:
    """Decide whether ``graph`` has a Pfaffian orientation and produce one if so.

    Args:
        graph: Any bipartite graph.

    Returns:
        PfaffianVerdict rooted at a PRUNED node whose child is a COMPONENTS node
        with one decomposition subtree per component.
    """
    identity = VertexMap.identity(graph.n_a, graph.n_b)
    if not has_perfect_matching(graph):
        logger.info("graph has no perfect matching; every orientation is Pfaffian")
        return PfaffianVerdict(
            pfaffian=True,
            orientation=Orientation.uniform(graph),
            tree=_leaf(graph, identity, LeafKind.NO_PERFECT_MATCHING),
        )

    decomposition = decompose_graph(graph, max_matching(graph))
    components = decomposition.children[0]
    directions = {e: Direction.A_TO_B for e in graph.edges}
    subtrees: List[DecompositionTree] = []
    failure: Optional[Tuple[int, NoPfaffianReason]] = None
    for subtree in components.children:
        verdict = _orient_tree(subtree)
        subtrees.append(verdict.tree)
        if not verdict.pfaffian:
            failure = (len(subtrees) - 1, verdict.reason)
            break
        for e, d in verdict.orientation.directions.items():
            directions[subtree.origin.edge_to_parent(e)] = d

    components = components.model_copy(update={"children": subtrees})
    root = decomposition.model_copy(update={"children": [components]})
    if failure is not None:
        index, reason = failure
        return PfaffianVerdict(pfaffian=False, tree=root, reason=reason.under(index).under(0))
    logger.info("found a Pfaffian orientation over %d component(s)", len(subtrees))
    return PfaffianVerdict(pfaffian=True, tree=root, orientation=Orientation(graph=graph, directions=directions))
