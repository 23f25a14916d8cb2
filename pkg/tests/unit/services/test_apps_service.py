import random
from unittest.mock import patch

import pytest

from models.digraph import Digraph
from models.matrix import SignMatrix, ZeroOneMatrix
from services.apps_service import bipartite_of_digraph, is_even_digraph, polya_matrix, sign_nonsingular
from services.graph_service import fano_incidence_matrix, heawood_graph
from services.matching_service import as_digraph, digraph_of, max_matching
from services.oracle_service import all_circuits_odd, determinant, is_even_by_circuits, permanent


def _random_digraph(seed: int) -> Digraph:
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    p = rng.uniform(0.2, 0.6)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n=n, arcs=frozenset(arcs))


@pytest.mark.unit
class TestPolya:
    def test_two_by_two(self):
        signed = polya_matrix(ZeroOneMatrix.from_rows([[1, 1], [1, 1]]))
        assert signed.support().rows() == [[1, 1], [1, 1]]
        assert determinant(signed.rows()) == 2

    def test_fano_incidence(self):
        signed = polya_matrix(fano_incidence_matrix())
        assert determinant(signed.rows()) == permanent(fano_incidence_matrix().rows()) == 24

    def test_all_ones_three_by_three(self):
        assert polya_matrix(ZeroOneMatrix.from_rows([[1] * 3 for _ in range(3)])) is None

    def test_zero_permanent(self):
        matrix = ZeroOneMatrix.from_rows([[1, 1], [0, 0]])
        assert polya_matrix(matrix).support() == matrix

    def test_skips_check_above_limit(self):
        signed = polya_matrix(ZeroOneMatrix.from_rows([[1, 1], [1, 1]]), limit=1)
        assert abs(determinant(signed.rows())) == 2


@pytest.mark.unit
class TestEvenDigraphs:
    def test_bipartite_graph_of_digraph(self, complete_digraph_3):
        graph = bipartite_of_digraph(complete_digraph_3)
        assert (graph.n_a, graph.n_b, graph.edge_count) == (3, 3, 9)

    def test_complete_digraph_is_even(self, complete_digraph_3):
        assert is_even_digraph(complete_digraph_3).even

    @patch("services.apps_service.pfaffian_orientation")
    def test_dense_digraph_is_even_without_decomposing(self, mock_orient):
        """A strongly 2-connected digraph with more than 3n-4 arcs is even."""
        complete = Digraph(n=4, arcs=frozenset((u, v) for u in range(4) for v in range(4) if u != v))
        assert is_even_digraph(complete).even
        mock_orient.assert_not_called()

    def test_two_cycle_is_not_even(self):
        verdict = is_even_digraph(Digraph(n=2, arcs=frozenset({(0, 1), (1, 0)})))
        assert not verdict.even
        assert sum(verdict.witness.weights.values()) == 1

    def test_acyclic_digraph(self):
        verdict = is_even_digraph(Digraph(n=3, arcs=frozenset({(0, 1), (1, 2), (0, 2)})))
        assert not verdict.even

    def test_heawood_digraph_is_not_even(self):
        graph = heawood_graph()
        digraph = as_digraph(digraph_of(graph, max_matching(graph)))
        verdict = is_even_digraph(digraph)
        assert not verdict.even
        assert all_circuits_odd(verdict.witness)

    @pytest.mark.oracle
    @pytest.mark.parametrize("seed", range(25))
    def test_agrees_with_circuit_system(self, seed):
        digraph = _random_digraph(seed)
        assert is_even_digraph(digraph).even == is_even_by_circuits(digraph).even


@pytest.mark.unit
class TestSignNonsingular:
    @pytest.mark.parametrize("limit", [None, 0])
    @pytest.mark.parametrize(
        "rows,expected",
        [
            ([[1, 0], [0, 1]], True),
            ([[1, 1], [-1, 1]], True),
            ([[1, 1], [1, 1]], False),
            ([[1, 1, 1], [1, 1, 1], [1, 1, 1]], False),
            ([[1, 0], [1, 0]], False),
        ],
    )
    def test_examples(self, rows, expected, limit):
        assert sign_nonsingular(SignMatrix.from_rows(rows), limit=limit) is expected

    def test_signed_fano_matrix(self):
        signed = polya_matrix(fano_incidence_matrix())
        assert sign_nonsingular(signed)
        assert sign_nonsingular(signed, limit=0)
