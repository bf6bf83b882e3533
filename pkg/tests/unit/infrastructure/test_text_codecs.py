from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from domain.errors import InputError, ParseError
from domain.models import BlueExpansion, Colour, Embedding, Graph, RedMultipartite, SeededRandomColouring
from domain.services import complete_dary_tree
from infrastructure.storage import (
    LocalTextStore,
    dump_json,
    format_colouring,
    format_embedding,
    format_graph,
    format_tree,
    parse_colouring,
    parse_dichotomy,
    parse_embedding,
    parse_graph,
    parse_tree,
)


def test_graph_text_format() -> None:
    text = format_graph(Graph.cycle(4))

    assert text == "4 4\n0 1\n0 3\n1 2\n2 3\n"
    assert parse_graph(text) == Graph.cycle(4)


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("3 2\n0 1\n1 x\n", 3),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 1\n2 1\n", 2),
        ("3 2\n0 1\n", 2),
        ("3\n", 1),
        ("", 1),
    ],
)
def test_graph_parse_errors_carry_line(text: str, line: int) -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_graph(text, source="g.txt")

    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"g.txt:{line}:")


def test_tree_text_format() -> None:
    tree = complete_dary_tree(2, 2)

    assert format_tree(tree).startswith("7 0\n0 0 0 1 1 2 2")
    assert parse_tree(format_tree(tree)) == tree


def test_tree_parse_rejects_cycle_on_parent_line() -> None:
    with pytest.raises(ParseError) as excinfo:
        parse_tree("3 0\n0 2 1\n")

    assert excinfo.value.line == 2


def test_colouring_text_format() -> None:
    graph = Graph.complete(5)
    colouring = SeededRandomColouring(graph, 3)

    parsed = parse_colouring(format_colouring(colouring), graph)

    assert all(parsed.colour(u, v) is colouring.colour(u, v) for u, v in graph.edges())


def test_colouring_parse_errors() -> None:
    graph = Graph.path(3)

    with pytest.raises(ParseError, match="R"):
        parse_colouring("3 2\n0 1 R\n1 2 G\n", graph)
    with pytest.raises(ParseError):
        parse_colouring("3 2\n0 1 R\n0 2 B\n", graph)
    with pytest.raises(ParseError):
        parse_colouring("4 2\n0 1 R\n1 2 B\n", graph)


def test_embedding_text_format() -> None:
    embedding = Embedding((4, 0, 2))

    assert format_embedding(embedding) == "0 4\n1 0\n2 2\n"
    assert parse_embedding(format_embedding(embedding)) == embedding
    with pytest.raises(ParseError):
        parse_embedding("1 4\n")


def test_dichotomy_json_is_read_back() -> None:
    red = RedMultipartite(parts=((0, 1), (2, 3)), peeled=((0,), (1,)))
    blue = BlueExpansion(vertices=(0, 2), exact=False)

    assert parse_dichotomy(dump_json(red.to_dict())) == red
    assert parse_dichotomy(dump_json(blue.to_dict())) == blue
    with pytest.raises(ParseError):
        parse_dichotomy(json.dumps({"kind": "other"}))
    with pytest.raises(ParseError):
        parse_dichotomy("{")


def test_dump_json_is_deterministic() -> None:
    assert dump_json({"b": 1, "a": [Colour.RED.label]}) == '{\n  "a": [\n    "red"\n  ],\n  "b": 1\n}\n'


def test_local_text_store(tmp_path: Path) -> None:
    out = io.StringIO()
    store = LocalTextStore(stdin=io.StringIO("2 1\n0 1\n"), stdout=out)

    assert store.read_text("-") == "2 1\n0 1\n"
    store.write_text("-", "hello\n")
    store.write_text(tmp_path / "a" / "b.txt", "x")

    assert out.getvalue() == "hello\n"
    assert (tmp_path / "a" / "b.txt").read_text(encoding="utf-8") == "x"
    assert store.source_name("-") == "<stdin>"
    with pytest.raises(InputError):
        store.read_text(tmp_path / "missing.txt")
