import json
from unittest.mock import patch

import pytest

from cli import EXIT_INPUT, EXIT_LIMIT, EXIT_NO, EXIT_VERIFICATION, EXIT_YES, main
from repositories.graph_file_repository import format_graph
from services.graph_service import heawood_graph
from tests.conftest import C4_TEXT, K33_TEXT, PATH_TEXT, TRIANGLE_DIGRAPH_TEXT, TWO_C4_TEXT
from tests.fixtures.graph_corpus import book_of_squares

pytestmark = [pytest.mark.integration, pytest.mark.cli]


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_pfaffian_prints_orientation(write, capsys):
    """Orientation lines go to stdout, one per edge in sorted order."""
    code = main(["pfaffian", write("c4.txt", C4_TEXT), "--verify"])
    out = capsys.readouterr().out
    assert code == EXIT_YES
    lines = out.splitlines()
    assert [line[:5] for line in lines] == ["e 1 1", "e 1 2", "e 2 1", "e 2 2"]
    assert sum(line.endswith("<") for line in lines) % 2 == 1


def test_pfaffian_k33(write, capsys):
    code = main(["pfaffian", write("k33.txt", K33_TEXT), "--verify"])
    assert code == EXIT_NO
    assert capsys.readouterr().out == "NONE: brace has more than 2n-4 edges\n"


def test_pfaffian_json(write, capsys):
    """JSON output carries the verdict and the decomposition tree."""
    code = main(["pfaffian", write("book.txt", format_graph(book_of_squares(2))), "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == EXIT_YES
    assert payload["pfaffian"] is True
    assert payload["reason"] is None
    assert len(payload["orientation"]) == 7
    components = payload["tree"]["children"][0]
    assert components["kind"] == "components"
    assert components["children"][0]["kind"] == "two_sum"


def test_pfaffian_dot(write, capsys):
    code = main(["pfaffian", write("c4.txt", C4_TEXT), "--format", "dot"])
    out = capsys.readouterr().out
    assert code == EXIT_YES
    assert out.startswith("digraph G {")
    assert out.count("->") == 4


def test_missing_file(tmp_path, capsys):
    code = main(["pfaffian", str(tmp_path / "nope.txt")])
    assert code == EXIT_INPUT
    assert "cannot read" in capsys.readouterr().err


def test_malformed_graph(write, capsys):
    code = main(["pfaffian", write("bad.txt", "bipartite 2 2\ne 1 1\ne 1 1\n")])
    assert code == EXIT_INPUT
    assert "line 3" in capsys.readouterr().err


def test_invalid_limit(write, capsys):
    code = main(["pfaffian", write("c4.txt", C4_TEXT), "--oracle-limit", "0"])
    assert code == EXIT_INPUT


@patch("cli.verify_orientation")
def test_failed_verification(mock_verify, write, capsys):
    """An orientation the oracle rejects ends with the verification exit code."""
    mock_verify.return_value = False
    code = main(["pfaffian", write("c4.txt", C4_TEXT), "--verify"])
    assert code == EXIT_VERIFICATION
    assert "verification failed" in capsys.readouterr().err


def test_verify_command(write, capsys):
    graph = write("c4.txt", C4_TEXT)
    good = write("good.txt", "e 1 1 >\ne 1 2 >\ne 2 1 >\ne 2 2 <\n")
    bad = write("bad.txt", "e 1 1 >\ne 1 2 >\ne 2 1 >\ne 2 2 >\n")
    assert main(["verify", graph, good]) == EXIT_YES
    assert main(["verify", graph, bad]) == EXIT_NO
    assert capsys.readouterr().out == "PFAFFIAN\nNOT-PFAFFIAN\n"


def test_size_limit(write, capsys):
    """The exact check refuses matrices above --oracle-limit."""
    graph = write("c4.txt", C4_TEXT)
    orientation = write("o.txt", "e 1 1 >\ne 1 2 >\ne 2 1 >\ne 2 2 <\n")
    assert main(["verify", graph, orientation, "--oracle-limit", "1"]) == EXIT_LIMIT
    assert "exceeds the configured limit 1" in capsys.readouterr().err


def test_decompose_command(write, capsys):
    code = main(["decompose", write("book.txt", format_graph(book_of_squares(2)))])
    tree = json.loads(capsys.readouterr().out)
    assert code == EXIT_YES
    two_sum = tree["children"][0]["children"][0]
    assert two_sum["kind"] == "two_sum"
    assert [child["kind"] for child in two_sum["children"]] == ["leaf", "leaf"]


def test_decompose_disjoint_circuits(write, capsys):
    """A disconnected graph is decomposed component by component."""
    code = main(["decompose", write("two.txt", TWO_C4_TEXT)])
    tree = json.loads(capsys.readouterr().out)
    assert code == EXIT_YES
    assert [child["leaf"] for child in tree["children"][0]["children"]] == ["brace", "brace"]


def test_decompose_path(write, capsys):
    code = main(["decompose", write("path.txt", PATH_TEXT)])
    tree = json.loads(capsys.readouterr().out)
    assert code == EXIT_YES
    assert tree["removed_edges"] == [[2, 1]]


def test_decompose_without_perfect_matching(write, capsys):
    assert main(["decompose", write("p.txt", "bipartite 2 1\ne 1 1\ne 2 1\n")]) == EXIT_INPUT
    assert "no perfect matching" in capsys.readouterr().err


def test_decompose_dot_embeds_planar_braces(write, capsys):
    """Each planar brace is written as an embedded DOT graph in input labels."""
    assert main(["decompose", write("two.txt", TWO_C4_TEXT), "--format", "dot"]) == EXIT_YES
    out = capsys.readouterr().out
    assert out.count("graph brace") == 2
    assert '"a3" [rotation=' in out
    assert main(["decompose", write("k33.txt", K33_TEXT), "--format", "dot"]) == EXIT_YES
    assert capsys.readouterr().out == "// brace1 is not planar\n"


def test_polya_command(write, capsys):
    assert main(["polya", write("m.txt", "1 1\n1 1\n")]) == EXIT_YES
    rows = [list(map(int, line.split())) for line in capsys.readouterr().out.splitlines()]
    assert [[abs(x) for x in row] for row in rows] == [[1, 1], [1, 1]]
    assert rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0] == 2
    assert main(["polya", write("k.txt", "1 1 1\n1 1 1\n1 1 1\n")]) == EXIT_NO
    assert capsys.readouterr().out == "NONE\n"


def test_even_command(write, capsys):
    assert main(["even", write("d.txt", TRIANGLE_DIGRAPH_TEXT)]) == EXIT_NO
    assert capsys.readouterr().out == "EVEN\n"
    assert main(["even", write("t.txt", "digraph 2\na 1 2\na 2 1\n")]) == EXIT_YES
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "NOT-EVEN"
    assert [line[:5] for line in out[1:]] == ["w 1 2", "w 2 1"]


def test_sns_command(write, capsys):
    assert main(["sns", write("s.txt", "1 1\n-1 1\n")]) == EXIT_YES
    assert main(["sns", write("n.txt", "1 1\n1 1\n")]) == EXIT_NO
    assert capsys.readouterr().out == "SNS\nNOT-SNS\n"


def test_heawood_orientation(write, capsys):
    """Every Heawood edge points from A to B."""
    code = main(["pfaffian", write("h.txt", format_graph(heawood_graph()))])
    lines = capsys.readouterr().out.splitlines()
    assert code == EXIT_YES
    assert len(lines) == 21
    assert all(line.endswith(">") for line in lines)


def test_empty_graph(write, capsys):
    assert main(["pfaffian", write("e.txt", "bipartite 0 0\n")]) == EXIT_YES
    assert capsys.readouterr().out == ""


def test_pfaffian_output_round_trips_through_verify(write, capsys):
    graph = write("book.txt", format_graph(book_of_squares(3)))
    assert main(["pfaffian", graph]) == EXIT_YES
    orientation = write("o.txt", capsys.readouterr().out)
    assert main(["verify", graph, orientation]) == EXIT_YES
    assert capsys.readouterr().out == "PFAFFIAN\n"
