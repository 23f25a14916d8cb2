"""
Text formats for graphs, digraphs, matrices and orientations.

Files use 1-based vertex indices; everything in memory is 0-based.
"""
import json
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import ValidationError

from models.bipartite_graph import SIDE_A, BipartiteGraph, Vertex, VertexMap
from models.decomposition import DecompositionTree, NodeKind
from models.digraph import Digraph, EdgeWeighting
from models.embedding import Embedding
from models.matrix import SignMatrix, ZeroOneMatrix
from models.orientation import Direction, Orientation
from utils.exceptions import GraphFormatError

_SYMBOLS = {">": Direction.A_TO_B, "<": Direction.B_TO_A}


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line.split()


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", line)


def _header(lines: List[Tuple[int, List[str]]], keyword: str, arity: int) -> List[int]:
    if not lines:
        raise GraphFormatError(f"missing '{keyword}' header")
    number, tokens = lines[0]
    if tokens[0] != keyword or len(tokens) != arity + 1:
        raise GraphFormatError(f"expected '{keyword}' followed by {arity} integer(s)", number)
    values = [_int(t, number) for t in tokens[1:]]
    if any(v < 0 for v in values):
        raise GraphFormatError("sizes must be non-negative", number)
    return values


def _pairs(lines, keyword: str, sizes: Tuple[int, int], extra: int = 0):
    """Yield (line, i, j, extra tokens) for each body line, converting to 0-based."""
    seen = set()
    for number, tokens in lines:
        if tokens[0] != keyword or len(tokens) != 3 + extra:
            raise GraphFormatError(f"expected '{keyword} <i> <j>'" + (" <value>" if extra else ""), number)
        i, j = _int(tokens[1], number) - 1, _int(tokens[2], number) - 1
        if not (0 <= i < sizes[0] and 0 <= j < sizes[1]):
            raise GraphFormatError(f"index out of range in {' '.join(tokens)}", number)
        if (i, j) in seen:
            raise GraphFormatError(f"duplicate entry {tokens[1]} {tokens[2]}", number)
        seen.add((i, j))
        yield number, i, j, tokens[3:]


def parse_graph(text: str) -> BipartiteGraph:
    """
    Parse the bipartite graph format.

    Args:
        text: ``bipartite <n_a> <n_b>`` followed by ``e <a> <b>`` lines

    Returns:
        The parsed graph
    """
    lines = list(_content_lines(text))
    n_a, n_b = _header(lines, "bipartite", 2)
    edges = [(i, j) for _, i, j, _ in _pairs(lines[1:], "e", (n_a, n_b))]
    return BipartiteGraph.from_edges(n_a, n_b, edges)


def format_graph(graph: BipartiteGraph) -> str:
    out = [f"bipartite {graph.n_a} {graph.n_b}"]
    out += [f"e {a + 1} {b + 1}" for a, b in graph.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_digraph(text: str) -> Digraph:
    lines = list(_content_lines(text))
    (n,) = _header(lines, "digraph", 1)
    arcs = []
    for number, u, v, _ in _pairs(lines[1:], "a", (n, n)):
        if u == v:
            raise GraphFormatError("loops are not allowed", number)
        arcs.append((u, v))
    return Digraph(n=n, arcs=frozenset(arcs))


def format_digraph(digraph: Digraph) -> str:
    out = [f"digraph {digraph.n}"] + [f"a {u + 1} {v + 1}" for u, v in digraph.sorted_arcs()]
    return "\n".join(out) + "\n"


def parse_matrix_rows(text: str) -> List[List[int]]:
    rows = []
    for number, tokens in _content_lines(text):
        row = [_int(t, number) for t in tokens]
        if any(x not in (-1, 0, 1) for x in row):
            raise GraphFormatError("matrix entries must be -1, 0 or 1", number)
        rows.append((number, row))
    for number, row in rows:
        if len(row) != len(rows):
            raise GraphFormatError(f"matrix is not square: row has {len(row)} entries, expected {len(rows)}", number)
    return [row for _, row in rows]


def parse_zero_one_matrix(text: str) -> ZeroOneMatrix:
    rows = parse_matrix_rows(text)
    if any(x < 0 for row in rows for x in row):
        raise GraphFormatError("a 0/1 matrix cannot contain -1")
    return ZeroOneMatrix.from_rows(rows)


def parse_sign_matrix(text: str) -> SignMatrix:
    return SignMatrix.from_rows(parse_matrix_rows(text))


def format_matrix(rows: List[List[int]]) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in rows)


def parse_orientation(text: str, graph: BipartiteGraph) -> Orientation:
    """
    Parse orientation lines ``e <a> <b> <dir>`` for the edges of ``graph``.

    Args:
        text: Orientation file contents
        graph: Graph whose every edge must appear exactly once

    Returns:
        The orientation
    """
    directions: Dict[Tuple[int, int], Direction] = {}
    for number, a, b, rest in _pairs(_content_lines(text), "e", (graph.n_a, graph.n_b), extra=1):
        if rest[0] not in _SYMBOLS:
            raise GraphFormatError(f"direction must be '>' or '<', got {rest[0]!r}", number)
        if (a, b) not in graph.edges:
            raise GraphFormatError(f"e {a + 1} {b + 1} is not an edge of the graph", number)
        directions[(a, b)] = _SYMBOLS[rest[0]]
    missing = graph.edges - set(directions)
    if missing:
        a, b = min(missing)
        raise GraphFormatError(f"edge {a + 1} {b + 1} has no direction")
    return Orientation(graph=graph, directions=directions)


def format_orientation(orientation: Orientation) -> str:
    return "".join(
        f"e {a + 1} {b + 1} {orientation.direction(a, b).symbol}\n" for a, b in orientation.graph.sorted_edges()
    )


def format_weighting(weighting: EdgeWeighting) -> str:
    return "".join(f"w {u + 1} {v + 1} {weighting.weights[(u, v)]}\n" for u, v in weighting.digraph.sorted_arcs())


def read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}")


def load(parser, text: str):
    """Run ``parser`` and report model validation failures as format errors."""
    try:
        return parser(text)
    except ValidationError as exc:
        raise GraphFormatError(exc.errors()[0]["msg"])


def _label(v: Vertex) -> str:
    return f"{v[0]}{v[1] + 1}"


def tree_to_dict(tree: DecompositionTree) -> dict:
    """Serialise a decomposition tree with vertex sets in the input graph's 1-based indices."""
    origin = tree.origin
    node = {
        "kind": tree.kind.value,
        "vertices": {
            "a": [origin.a[i] + 1 for i in range(tree.graph.n_a)],
            "b": [origin.b[j] + 1 for j in range(tree.graph.n_b)],
        },
        "edges": tree.graph.edge_count,
    }
    if tree.kind is NodeKind.LEAF:
        node["leaf"] = tree.leaf.value
    if tree.kind is NodeKind.PRUNED:
        node["removed_edges"] = [[a + 1, b + 1] for a, b in sorted(tree.removed_edges)]
    if tree.two_sum is not None:
        u1, u2 = tree.two_sum.edge
        node["edge"] = [origin.a[u1] + 1, origin.b[u2] + 1]
    if tree.trisum is not None:
        t = tree.trisum.trisector
        node["trisector"] = {"a": [origin.a[i] + 1 for i in t.a], "b": [origin.b[j] + 1 for j in t.b]}
        node["deleted_circuit_edges"] = [
            [origin.a[a] + 1, origin.b[b] + 1] for a, b in sorted(tree.trisum.deleted_circuit_edges)
        ]
    if tree.children:
        node["children"] = [tree_to_dict(child) for child in tree.children]
    return node


def dump_tree_json(tree: DecompositionTree) -> str:
    return json.dumps(tree_to_dict(tree), indent=2) + "\n"


def orientation_to_dot(orientation: Orientation, name: str = "G") -> str:
    graph = orientation.graph
    out = [f"digraph {name} {{"]
    out += [f'  "{_label(v)}" [shape={"box" if v[0] == SIDE_A else "circle"}];' for v in graph.vertices()]
    for e in graph.sorted_edges():
        tail, head = orientation.tail_and_head(e)
        out.append(f'  "{_label(tail)}" -> "{_label(head)}";')
    out.append("}")
    return "\n".join(out) + "\n"


def embedding_to_dot(embedding: Embedding, name: str = "G", origin: Optional[VertexMap] = None) -> str:
    """Write a plane embedding as an undirected DOT graph with a clockwise ``rotation`` per vertex.

    With ``origin`` the labels are those of the graph the embedded piece came from.
    """
    def label(v: Vertex) -> str:
        return _label(origin.to_parent(v) if origin is not None else v)

    out = [f"graph {name} {{"]
    for v in embedding.rotation:
        order = " ".join(label(u) for u in embedding.rotation[v])
        out.append(f'  "{label(v)}" [rotation="{order}"];')
    drawn = set()
    for face in embedding.faces:
        for u, v in face:
            if (v, u) not in drawn:
                drawn.add((u, v))
                out.append(f'  "{label(u)}" -- "{label(v)}";')
    out.append("}")
    return "\n".join(out) + "\n"
