import random

import pytest

from models.bipartite_graph import BipartiteGraph
from models.matrix import ZeroOneMatrix
from models.orientation import Direction, Orientation
from services.graph_service import (
    connected_components,
    fano_lines,
    flip_vertices,
    graph_of_matrix,
    heawood_graph,
    is_connected,
    matrix_of_graph,
)
from services.oracle_service import is_pfaffian_orientation
from services.planar_service import planar_orientation
from utils.exceptions import InvalidGraphError


@pytest.mark.unit
class TestGraphService:
    def test_matrix_round_trip(self):
        matrix = ZeroOneMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
        graph = graph_of_matrix(matrix)
        assert graph.edge_count == 6
        assert graph.has_edge(0, 2)
        assert matrix_of_graph(graph) == matrix

    def test_unbalanced_graph_has_no_matrix(self):
        with pytest.raises(InvalidGraphError):
            matrix_of_graph(BipartiteGraph.from_edges(2, 1, [(0, 0)]))

    def test_components_are_ordered_by_smallest_vertex(self):
        graph = BipartiteGraph.from_edges(3, 3, [(2, 2), (0, 1), (1, 1)])
        parts = connected_components(graph)
        assert len(parts) == 3
        first, first_map = parts[0]
        assert first_map.a == (0, 1) and first_map.b == (1,)
        assert first.edge_count == 2
        # b0 is isolated and comes after every component holding an A vertex
        assert parts[2][1].b == (0,)
        assert not is_connected(graph)

    def test_flip_reverses_crossing_edges(self, c4):
        flipped = flip_vertices(Orientation.uniform(c4), [("a", 0)])
        assert flipped.direction(0, 0) is Direction.B_TO_A
        assert flipped.direction(0, 1) is Direction.B_TO_A
        assert flipped.direction(1, 0) is Direction.A_TO_B

    def test_flipping_an_edge_keeps_it(self, c4):
        flipped = flip_vertices(Orientation.uniform(c4), [("a", 0), ("b", 0)])
        assert flipped.direction(0, 0) is Direction.A_TO_B
        assert flipped.direction(1, 1) is Direction.A_TO_B
        assert flipped.direction(0, 1) is Direction.B_TO_A

    def test_fano_plane(self):
        lines = fano_lines()
        assert len(lines) == 7
        assert all(len(set(line)) == 3 for line in lines)

    def test_heawood_graph_is_cubic(self):
        graph = heawood_graph()
        assert (graph.n_a, graph.n_b, graph.edge_count) == (7, 7, 21)
        assert all(graph.degree(v) == 3 for v in graph.vertices())


def _random_subset(graph: BipartiteGraph, rng: random.Random):
    return [v for v in graph.vertices() if rng.random() < 0.5]


@pytest.mark.unit
class TestFlipInvariance:
    @pytest.mark.parametrize("seed", range(100))
    def test_flips_keep_an_orientation_pfaffian(self, cube_graph, seed):
        orientation = planar_orientation(cube_graph)
        flipped = flip_vertices(orientation, _random_subset(cube_graph, random.Random(seed)))
        assert is_pfaffian_orientation(cube_graph, flipped)

    def test_flipping_twice_is_the_identity(self, heawood):
        orientation = Orientation.uniform(heawood)
        rng = random.Random(1)
        for _ in range(20):
            subset = _random_subset(heawood, rng)
            assert flip_vertices(flip_vertices(orientation, subset), subset) == orientation

    def test_flipping_the_complement_is_the_same(self, cube_graph):
        orientation = planar_orientation(cube_graph)
        rng = random.Random(2)
        for _ in range(20):
            subset = _random_subset(cube_graph, rng)
            complement = [v for v in cube_graph.vertices() if v not in subset]
            assert flip_vertices(orientation, subset) == flip_vertices(orientation, complement)
