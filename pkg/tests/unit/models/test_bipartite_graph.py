import pytest
from pydantic import ValidationError

from models.bipartite_graph import BipartiteGraph, Matching, VertexMap


@pytest.mark.unit
class TestBipartiteGraph:
    def test_equality_ignores_edge_order(self):
        first = BipartiteGraph.from_edges(2, 2, [(0, 0), (1, 1), (0, 1)])
        second = BipartiteGraph.from_edges(2, 2, [(0, 1), (0, 0), (1, 1)])
        assert first == second

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValidationError):
            BipartiteGraph.from_edges(2, 2, [(0, 2)])

    def test_vertices_are_in_canonical_order(self):
        graph = BipartiteGraph(n_a=2, n_b=1)
        assert graph.vertices() == [("a", 0), ("a", 1), ("b", 0)]

    def test_neighbours(self, c6):
        assert c6.neighbors(("a", 0)) == [("b", 0), ("b", 1)]
        assert c6.degree(("b", 2)) == 2

    def test_networkx_nodes_carry_sides(self, c4):
        g = c4.to_networkx()
        assert g.number_of_nodes() == 4
        assert g.number_of_edges() == 4
        assert g.nodes[0]["side"] == "a"
        assert g.nodes[2]["side"] == "b"
        assert c4.vertex_at(3) == ("b", 1)
        assert c4.node_id(("b", 1)) == 3

    def test_induced_subgraph_keeps_map(self, c6):
        sub, vmap = c6.without_vertices([("a", 0), ("b", 0)])
        assert (sub.n_a, sub.n_b) == (2, 2)
        assert vmap.a == (1, 2)
        assert vmap.b == (1, 2)
        assert sub.edge_count == 3

    def test_cyclomatic_number(self, c6, k33):
        assert c6.cyclomatic_number() == 1
        assert k33.cyclomatic_number() == 4
        assert BipartiteGraph(n_a=0, n_b=0).cyclomatic_number() == 0


@pytest.mark.unit
class TestVertexMap:
    def test_then_composes_maps(self):
        inner = VertexMap(a=(1,), b=(0,))
        outer = VertexMap(a=(5, 7), b=(3,))
        assert inner.then(outer) == VertexMap(a=(7,), b=(3,))

    def test_edge_to_parent(self):
        vmap = VertexMap(a=(2, 4), b=(1, 3))
        assert vmap.edge_to_parent((1, 0)) == (4, 1)


@pytest.mark.unit
class TestMatching:
    def test_rejects_shared_endpoints(self):
        with pytest.raises(ValidationError):
            Matching(edges=frozenset({(0, 0), (0, 1)}))

    def test_perfect_in(self, c4):
        assert Matching(edges=frozenset({(0, 0), (1, 1)})).is_perfect_in(c4)
        assert not Matching(edges=frozenset({(0, 0)})).is_perfect_in(c4)
