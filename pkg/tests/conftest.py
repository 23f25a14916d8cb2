import pytest
from fastapi.testclient import TestClient

from main import app
from models.bipartite_graph import BipartiteGraph
from models.digraph import Digraph
from services.graph_service import heawood_graph
from tests.fixtures.graph_corpus import (
    book_of_squares,
    complete_bipartite,
    cube,
    even_cycle,
    grid,
    triple_cube,
)

# Text fixtures, 1-based as in the file formats
C4_TEXT = "bipartite 2 2\ne 1 1\ne 1 2\ne 2 1\ne 2 2\n"
K33_TEXT = "bipartite 3 3\n" + "".join(f"e {a} {b}\n" for a in range(1, 4) for b in range(1, 4))
TWO_C4_TEXT = "bipartite 4 4\n" + "".join(
    f"e {a} {b}\n" for lo in (1, 3) for a in (lo, lo + 1) for b in (lo, lo + 1)
)
# a1 - b1 - a2 - b2; the middle edge lies in no perfect matching
PATH_TEXT = "bipartite 2 2\ne 1 1\ne 2 1\ne 2 2\n"
TRIANGLE_DIGRAPH_TEXT = "digraph 3\n" + "".join(
    f"a {u} {v}\n" for u in range(1, 4) for v in range(1, 4) if u != v
)


@pytest.fixture
def c4() -> BipartiteGraph:
    return even_cycle(2)


@pytest.fixture
def c6() -> BipartiteGraph:
    return even_cycle(3)


@pytest.fixture
def k33() -> BipartiteGraph:
    return complete_bipartite(3, 3)


@pytest.fixture
def k44() -> BipartiteGraph:
    return complete_bipartite(4, 4)


@pytest.fixture
def heawood() -> BipartiteGraph:
    return heawood_graph()


@pytest.fixture
def cube_graph() -> BipartiteGraph:
    return cube()


@pytest.fixture
def ladder() -> BipartiteGraph:
    return grid(2, 3)


@pytest.fixture
def book() -> BipartiteGraph:
    return book_of_squares(2)


@pytest.fixture
def triple_theta() -> BipartiteGraph:
    return triple_cube()


@pytest.fixture
def complete_digraph_3() -> Digraph:
    return Digraph(n=3, arcs=frozenset((u, v) for u in range(3) for v in range(3) if u != v))


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)
