from unittest.mock import patch

import pytest

from models.bipartite_graph import BipartiteGraph, Matching
from models.digraph import Digraph
from services.matching_service import (
    as_digraph,
    digraph_of,
    has_perfect_matching,
    is_brace,
    is_k_extendable,
    is_k_extendable_by_hall,
    is_strongly_k_connected,
    max_matching,
    perfect_matching,
    prune_non_pm_edges,
)
from services.oracle_service import enumerate_perfect_matchings, is_k_extendable_by_definition
from tests.fixtures.graph_corpus import path_graph, random_balanced, random_connected
from utils.exceptions import (
    DisconnectedGraphError,
    InvalidGraphError,
    NoPerfectMatchingError,
    NotPerfectMatchingError,
    SizeLimitExceeded,
)


@pytest.mark.unit
class TestMatchings:
    def test_max_matching_size(self, k33):
        assert max_matching(k33).size == 3
        assert max_matching(path_graph(5)).size == 2

    def test_perfect_matching(self, cube_graph):
        assert perfect_matching(cube_graph).is_perfect_in(cube_graph)

    def test_no_perfect_matching(self):
        graph = path_graph(3)
        assert not has_perfect_matching(graph)
        with pytest.raises(NoPerfectMatchingError):
            perfect_matching(graph)

    def test_digraph_of_four_circuit(self, c4):
        md = digraph_of(c4, Matching(edges=frozenset({(0, 0), (1, 1)})))
        assert md.arc_edges == {(0, 1): (0, 1), (1, 0): (1, 0)}
        assert as_digraph(md).arc_count == 2

    def test_digraph_needs_perfect_matching(self, c4):
        with pytest.raises(NotPerfectMatchingError):
            digraph_of(c4, Matching(edges=frozenset({(0, 0)})))

    def test_prune_drops_forced_edge(self):
        graph = path_graph(4)
        result = prune_non_pm_edges(graph, perfect_matching(graph))
        assert result.removed == frozenset({(1, 0)})
        assert result.kept.edge_count == 2

    @pytest.mark.oracle
    @pytest.mark.parametrize("seed", range(30))
    def test_prune_matches_matching_enumeration(self, seed):
        """Removed edges are exactly those in no perfect matching."""
        graph = random_balanced(seed, max_side=6)
        used = set().union(*(m.edges for m in enumerate_perfect_matchings(graph)))
        result = prune_non_pm_edges(graph, max_matching(graph))
        assert result.removed == graph.edges - used
        assert result.kept.edges == frozenset(used)

    def test_prune_keeps_elementary_graphs(self, cube_graph):
        result = prune_non_pm_edges(cube_graph, perfect_matching(cube_graph))
        assert result.removed == frozenset()
        assert result.kept == cube_graph


@pytest.mark.unit
class TestExtendability:
    def test_strong_connectivity(self):
        cycle = Digraph(n=3, arcs=frozenset({(0, 1), (1, 2), (2, 0)}))
        assert is_strongly_k_connected(cycle, 1)
        assert not is_strongly_k_connected(cycle, 2)
        with pytest.raises(InvalidGraphError):
            is_strongly_k_connected(cycle, 3)

    def test_braces(self, c4, k33, cube_graph, heawood, c6):
        assert is_brace(c4)
        assert is_brace(k33)
        assert is_brace(cube_graph)
        assert is_brace(heawood)
        assert not is_brace(c6)
        assert is_k_extendable(c6, 1)

    def test_disconnected_graph(self):
        graph = BipartiteGraph.from_edges(2, 2, [(0, 0), (1, 1)])
        with pytest.raises(DisconnectedGraphError):
            is_k_extendable(graph, 1)
        assert not is_brace(graph)

    @pytest.mark.oracle
    @pytest.mark.parametrize("seed", range(30))
    def test_criteria_agree(self, seed):
        graph = random_connected(seed, max_vertices=8)
        if not has_perfect_matching(graph):
            pytest.skip("no perfect matching")
        ks = (1, 2) if graph.n_a >= 3 else (1,)
        for k in ks:
            expected = is_k_extendable_by_definition(graph, k)
            assert is_k_extendable(graph, k) == expected
            assert is_k_extendable_by_hall(graph, k) == expected

    @patch("services.matching_service.settings.enumeration_limit", 2)
    def test_hall_scan_respects_limit(self, k33):
        with pytest.raises(SizeLimitExceeded):
            is_k_extendable_by_hall(k33, 1)
